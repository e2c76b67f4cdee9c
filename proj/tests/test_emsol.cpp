#include "doctest.h"

#include "rgc/emsol.hpp"
#include "rgc/errors.hpp"
#include "rgc/graph.hpp"
#include "rgc/hom.hpp"

#include "support/fixtures.hpp"

#include <fstream>
#include <random>
#include <sstream>

using namespace rgc;
using namespace rgc::test;

namespace {

std::string data_file(const char * name)
{
    std::ifstream in(std::string(RGC_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}

TEST_SUITE("emsol") {

TEST_CASE("formula of the minimal heap")
{
    auto f = emit_formula(minimal_heap());
    CHECK(f.k == 2);
    CHECK(f.allowed[0][1] == std::vector<int>{0}); // root's s1 successors: null
    CHECK(f.allowed[1][1] == std::vector<int>{0});
    CHECK(f.allowed[0][0] == std::vector<int>{0}); // null self-loop
}

TEST_CASE("formula of the root-self-loop graph")
{
    auto f = emit_formula(paper_g1());
    CHECK(f.allowed[1][1] == std::vector<int>{1}); // s2 keeps color root
}

TEST_CASE("rendering carries the partit and singl headers")
{
    std::string text = render_formula(emit_formula(minimal_heap()));
    CHECK(text.find("partit(X0,X1)") != std::string::npos);
    CHECK(text.find("singl(X0,null)") != std::string::npos);
    CHECK(text.find("singl(X1,root)") != std::string::npos);
    CHECK(text.find("EXISTS X0,X1 .") != std::string::npos);
}

TEST_CASE("formula text round-trips")
{
    std::mt19937 rng(14101);
    for (int trial = 0; trial < 50; ++trial) {
        Graph t = random_graph(rng, trial % 4);
        auto f = emit_formula(t);
        auto back = parse_formula(render_formula(f));
        CHECK(back.k == f.k);
        CHECK(back.allowed == f.allowed);
    }
}

TEST_CASE("evaluation agrees with homomorphism existence")
{
    std::mt19937 rng(14102);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(rng, trial % 4);
        Graph t = random_graph(rng, (trial + 1) % 4);
        CHECK(eval_formula(g, emit_formula(t)) == find_hom(g, t).has_value());
    }
}

TEST_CASE("minimal heap satisfies its own formula but not the self-loop one")
{
    CHECK(eval_formula(minimal_heap(), emit_formula(minimal_heap())));
    CHECK(! eval_formula(minimal_heap(), emit_formula(paper_g1())));
}

TEST_CASE("size guard")
{
    std::mt19937 rng(14103);
    Graph big = random_graph(rng, 4);
    CHECK_THROWS_AS(eval_formula(big, emit_formula(minimal_heap()), 3), PreconditionError);
    CHECK_NOTHROW(eval_formula(big, emit_formula(minimal_heap()), 4));
}

TEST_CASE("flexible formula: bundled in-degree-zero description is canonical")
{
    std::string bundled = data_file("indegree_zero.emsol2");
    auto f = parse_flexible(bundled);
    CHECK(f.k == 3);
    CHECK(render_flexible(f) == bundled);
}

TEST_CASE("flexible formula: empty clause set renders header-only")
{
    FlexFormula f;
    f.k = 2;
    f.b1.kind = FlexExpr::Kind::truth;
    f.b1.value = true;
    f.b2.kind = FlexExpr::Kind::truth;
    f.b2.value = true;
    std::string text = render_flexible(f);
    CHECK(text ==
        "EXISTS X0,X1 .\n"
        "singl(X0,null) AND singl(X1,root) AND\n"
        "ALL x . ALL y .\n"
        "B1: TRUE\n"
        "B2: TRUE\n");
    auto back = parse_flexible(text);
    CHECK(flex_equal(back.b1, f.b1));
}

TEST_CASE("flexible formula round-trips structurally")
{
    std::string bundled = data_file("indegree_zero.emsol2");
    auto f = parse_flexible(bundled);
    auto again = parse_flexible(render_flexible(f));
    CHECK(flex_equal(f.b1, again.b1));
    CHECK(flex_equal(f.b2, again.b2));
}

TEST_CASE("flexible formula rejects positive edge atoms")
{
    FlexFormula f;
    f.k = 2;
    f.b1.kind = FlexExpr::Kind::edge;
    f.b2.kind = FlexExpr::Kind::truth;
    f.b2.value = true;
    CHECK_THROWS_AS(render_flexible(f), PreconditionError);

    // negative occurrences are fine
    FlexFormula g;
    g.k = 2;
    g.b1.kind = FlexExpr::Kind::negation;
    g.b1.left = std::make_shared<FlexExpr>();
    g.b1.left->kind = FlexExpr::Kind::edge;
    g.b2.kind = FlexExpr::Kind::truth;
    g.b2.value = true;
    CHECK_NOTHROW(render_flexible(g));
}

TEST_CASE("flexible formula rejects out-of-range variables")
{
    FlexFormula f;
    f.k = 2;
    f.b1.kind = FlexExpr::Kind::var_x;
    f.b1.index = 5;
    f.b2.kind = FlexExpr::Kind::truth;
    f.b2.value = true;
    CHECK_THROWS_AS(render_flexible(f), PreconditionError);
}

}
