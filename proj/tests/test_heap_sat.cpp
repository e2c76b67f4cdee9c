#include "doctest.h"

#include "rgc/errors.hpp"
#include "rgc/graph.hpp"
#include "rgc/heap_sat.hpp"
#include "rgc/hom.hpp"

#include "support/fixtures.hpp"

#include <random>

using namespace rgc;
using namespace rgc::test;

TEST_SUITE("heap-sat") {

TEST_CASE("cleanup leaves a heap untouched")
{
    auto result = graph_cleanup(minimal_heap());
    CHECK(result.graph == minimal_heap());
    CHECK(result.trace.empty());
}

TEST_CASE("cleanup removes an unreachable node")
{
    Graph g = parse_graph(
        "node u\n"
        "s1 root null\ns2 root null\n"
        "s1 u null\ns2 u null\n");
    auto result = graph_cleanup(g);
    CHECK(result.graph == minimal_heap());
    REQUIRE(result.trace.size() == 1);
    CHECK(result.trace[0] == CleanupStep{"u", RemovalReason::unreachable});
}

TEST_CASE("cleanup cascade drains the whole graph")
{
    // a has no s2 edge; removing it strips root's s1 edge, and everything
    // follows
    Graph g = parse_graph("node a\ns1 root a\ns1 a null\ns2 root null\n");
    auto result = graph_cleanup(g);
    CHECK(result.graph.is_empty());
    REQUIRE(result.trace.size() == 3);
    CHECK(result.trace[0] == CleanupStep{"a", RemovalReason::missing_s2});
    CHECK(result.trace[1] == CleanupStep{"root", RemovalReason::missing_s1});
    CHECK(result.trace[2] == CleanupStep{"null", RemovalReason::unreachable});
}

TEST_CASE("cleanup reports missing-s1 first when both successors are absent")
{
    Graph g = parse_graph("node a\ns1 root a\ns2 root null\n");
    auto result = graph_cleanup(g);
    CHECK(result.graph.is_empty());
    REQUIRE(! result.trace.empty());
    CHECK(result.trace[0] == CleanupStep{"a", RemovalReason::missing_s1});
}

TEST_CASE("cleanup keeps null while root is alive")
{
    // root only self-loops; null is unreachable but ambient
    Graph g = parse_graph("s1 root root\ns2 root root\n");
    auto result = graph_cleanup(g);
    CHECK(! result.graph.is_empty());
    CHECK(result.graph == g);
}

TEST_CASE("extract_heap is the identity on heaps")
{
    std::mt19937 rng(9101);
    for (int trial = 0; trial < 50; ++trial) {
        Graph h = random_heap(rng, trial % 5);
        CHECK(extract_heap(h) == h);
    }
}

TEST_CASE("extract_heap picks the lexicographically least successor")
{
    Graph g = parse_graph("s1 root null\ns1 root root\ns2 root null\n");
    CHECK(extract_heap(g) == minimal_heap());
}

TEST_CASE("extract_heap rejects non-fixpoints")
{
    CHECK_THROWS_AS(extract_heap(parse_graph("node a\ns1 root a\ns2 root null\n")),
        PreconditionError);
    CHECK_THROWS_AS(extract_heap(Graph::empty_graph()), PreconditionError);
}

TEST_CASE("satisfiable graph yields a heap witness mapping back")
{
    std::mt19937 rng(9102);
    int sat_count = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(rng, trial % 5);
        auto result = sat_over_heaps(g);
        CHECK(result.satisfiable == result.witness.has_value());
        if (result.satisfiable) {
            ++sat_count;
            CHECK(classify(*result.witness).is_heap);
            // the witness is a subgraph: the id-preserving map is already a
            // homomorphism
            Homomorphism embed;
            embed.mapping.resize(result.witness->node_count());
            for (int v = 0; v < result.witness->node_count(); ++v) {
                auto target = g.find(result.witness->id(v));
                REQUIRE(target.has_value());
                embed.mapping[v] = *target;
            }
            CHECK(check_hom(*result.witness, g, embed));
        }
    }
    CHECK(sat_count > 20);
}

TEST_CASE("heaps are their own witnesses")
{
    std::mt19937 rng(9103);
    for (int trial = 0; trial < 40; ++trial) {
        Graph h = random_heap(rng, trial % 4);
        auto result = sat_over_heaps(h);
        REQUIRE(result.satisfiable);
        CHECK(*result.witness == h);
    }
}

TEST_CASE("unsat example from the cascade")
{
    auto result = sat_over_heaps(parse_graph("node a\ns1 root a\ns2 root null\n"));
    CHECK(! result.satisfiable);
    CHECK(! result.witness.has_value());
}

TEST_CASE("cleanup preserves the heap models")
{
    std::mt19937 rng(9104);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng, 2 + trial % 3, 0.4);
        Graph cleaned = graph_cleanup(g).graph;
        for (int htrial = 0; htrial < 10; ++htrial) {
            Graph h = random_heap(rng, htrial % 4);
            bool into_original = find_hom(h, g).has_value();
            bool into_cleaned = ! cleaned.is_empty() && find_hom(h, cleaned).has_value();
            CHECK(into_original == into_cleaned);
        }
    }
}

TEST_CASE("cleanup terminates with a strictly shrinking trace")
{
    std::mt19937 rng(9105);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(rng, trial % 6, 0.4);
        auto result = graph_cleanup(g);
        CHECK(int(result.trace.size()) <= g.node_count());
        // fixpoint: running cleanup again changes nothing
        if (! result.graph.is_empty()) {
            auto again = graph_cleanup(result.graph);
            CHECK(again.trace.empty());
            CHECK(again.graph == result.graph);
        }
    }
}

}
