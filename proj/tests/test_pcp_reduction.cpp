#include "doctest.h"

#include "rgc/errors.hpp"
#include "rgc/families.hpp"
#include "rgc/graph.hpp"
#include "rgc/heap_sat.hpp"
#include "rgc/hom.hpp"
#include "rgc/pcp.hpp"

#include <deque>
#include <random>
#include <set>

using namespace rgc;

namespace {

PcpInstance paper_instance()
{
    return PcpInstance::from_pairs({{"c", "bc"}, {"ab", "a"}});
}

PcpInstance unsolvable_instance()
{
    // every top word is strictly longer than its bottom word
    return PcpInstance::from_pairs({{"ab", "a"}, {"ba", "b"}});
}

}

TEST_SUITE("pcp-reduction") {

TEST_CASE("instance parsing and padding")
{
    auto inst = PcpInstance::parse("# demo\npair c bc\npair ab a\n");
    CHECK(inst.size() == 2);
    CHECK(inst.top(1) == std::vector<std::uint32_t>{'a', 'b'});

    auto padded = PcpInstance::from_pairs({{"aa", "aa"}});
    CHECK(padded.size() == 2);

    CHECK_THROWS_AS(PcpInstance::from_pairs({{"", "a"}}), PreconditionError);
    CHECK_THROWS_AS(PcpInstance::from_pairs({}), PreconditionError);
    CHECK_THROWS_AS(PcpInstance::parse("pear a b\n"), ParseError);
}

TEST_CASE("check_solution")
{
    auto inst = paper_instance();
    CHECK(check_solution(inst, {{1, 0}}));
    CHECK(! check_solution(inst, {{0, 1}}));
    CHECK(! check_solution(inst, {{}}));
    CHECK(! check_solution(inst, {{5}}));
}

TEST_CASE("brute solver finds the paper's solution")
{
    auto sol = brute_solve_pcp(paper_instance(), 2);
    REQUIRE(sol.has_value());
    CHECK(sol->indices == std::vector<int>{1, 0});
}

TEST_CASE("brute solver on an identical pair")
{
    auto sol = brute_solve_pcp(PcpInstance::from_pairs({{"a", "a"}, {"b", "c"}}), 3);
    REQUIRE(sol.has_value());
    CHECK(sol->indices == std::vector<int>{0});
}

TEST_CASE("brute solver returns shortest, lexicographically least")
{
    // both [0,1] and [1,0] solve; BFS order prefers [0,1]
    auto inst = PcpInstance::from_pairs({{"ab", "a"}, {"c", "bc"}});
    auto sol = brute_solve_pcp(inst, 4);
    REQUIRE(sol.has_value());
    CHECK(sol->indices == std::vector<int>{0, 1});
}

TEST_CASE("unsolvable instance exhausts the bound")
{
    CHECK(! brute_solve_pcp(unsolvable_instance(), 8).has_value());
}

TEST_CASE("reduction graph for the paper's instance")
{
    Graph g = build_reduction(paper_instance());
    CHECK(g.node_count() == 24);
    CHECK(classify(g).is_orable);
    auto sat = sat_over_heaps(g);
    REQUIRE(sat.satisfiable);
    // the extracted heap embeds back into the reduction graph
    auto h = find_hom(*sat.witness, g);
    REQUIRE(h.has_value());
    CHECK(check_hom(*sat.witness, g, *h));
}

TEST_CASE("s1-only reachability hits only c-nodes and null")
{
    std::vector<PcpInstance> pool{paper_instance(), unsolvable_instance(),
        PcpInstance::from_pairs({{"ab", "abab"}, {"b", "a"}})};
    for (auto & inst : pool) {
        Graph g = build_reduction(inst);
        std::set<int> seen{Graph::root_node};
        std::deque<int> queue{Graph::root_node};
        while (! queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.successors(Rel::s1, v))
                if (seen.insert(w).second)
                    queue.push_back(w);
        }
        for (int v : seen) {
            if (v == Graph::root_node || v == Graph::null_node)
                continue;
            CHECK(g.id(v)[0] == 'c');
        }
    }
}

TEST_CASE("witness_from_solution on the paper's instance")
{
    auto inst = paper_instance();
    auto witness = witness_from_solution(inst, {{1, 0}});
    CHECK(witness.params == CorresponderParams{3, 2, {2}, {1}});
    CHECK(classify(witness.cg).is_heap);
    CHECK(check_hom(witness.cg, build_reduction(inst), witness.hom));
}

TEST_CASE("witness_from_solution rejects non-solutions")
{
    CHECK_THROWS_AS(witness_from_solution(paper_instance(), {{0, 1}}), PreconditionError);
}

TEST_CASE("degenerate one-index solutions get doubled")
{
    auto inst = PcpInstance::from_pairs({{"aa", "aa"}});
    auto witness = witness_from_solution(inst, {{0}});
    CHECK(witness.params.k == 2);
    CHECK(witness.params.n == 4);
    CHECK(check_hom(witness.cg, build_reduction(inst), witness.hom));
}

TEST_CASE("solution round-trips through the witness")
{
    auto inst = paper_instance();
    auto witness = witness_from_solution(inst, {{1, 0}});
    auto back = solution_from_witness(inst, witness.cg, witness.hom);
    CHECK(back.indices == std::vector<int>{1, 0});
}

TEST_CASE("solution_from_witness rejects foreign maps")
{
    auto inst = paper_instance();
    auto witness = witness_from_solution(inst, {{1, 0}});
    Homomorphism broken = witness.hom;
    // redirect one C-node image to a non-c node
    int c0 = *witness.cg.find("C0");
    broken.mapping[c0] = *build_reduction(inst).find("a1_0_0");
    CHECK_THROWS_AS(solution_from_witness(inst, witness.cg, broken), PreconditionError);
}

TEST_CASE("witness construction works across randomized solvable instances")
{
    std::mt19937 rng(13102);
    const std::string letters = "abc";
    int built = 0;
    for (int trial = 0; trial < 200 && built < 25; ++trial) {
        // build a random instance that provably has a solution: generate a
        // random index sequence, then cut one concatenation into pieces
        int m = 2 + int(rng() % 2);
        int len = 1 + int(rng() % 3);
        std::vector<int> sol_indices(len);
        for (auto & t : sol_indices)
            t = int(rng() % m);
        std::string whole;
        for (int i = 0; i < 2 + int(rng() % 5); ++i)
            whole += letters[rng() % letters.size()];

        auto cut = [&](int pieces_wanted) {
            std::vector<std::string> pieces;
            std::size_t at = 0;
            for (int p = 0; p < pieces_wanted; ++p) {
                std::size_t remaining = whole.size() - at;
                int left = pieces_wanted - p;
                std::size_t take = left == 1
                    ? remaining
                    : 1 + rng() % std::max<std::size_t>(1, remaining - left + 1);
                pieces.push_back(whole.substr(at, take));
                at += take;
            }
            return pieces;
        };
        std::string top_concat, bottom_concat;
        std::vector<std::pair<std::string, std::string>> pairs(m, {"", ""});
        auto tops = cut(len);
        auto bots = cut(len);
        bool consistent = true;
        for (int j = 0; j < len; ++j) {
            auto & pair = pairs[sol_indices[j]];
            if (pair.first.empty() && pair.second.empty()) {
                pair.first = tops[j];
                pair.second = bots[j];
            }
            else if (pair.first != tops[j] || pair.second != bots[j])
                consistent = false;
        }
        if (! consistent)
            continue;
        for (auto & pair : pairs)
            if (pair.first.empty()) {
                pair.first = "x";
                pair.second = "y";
            }
        auto inst = PcpInstance::from_pairs(pairs);
        PcpSolution sol{sol_indices};
        if (! check_solution(inst, sol))
            continue;
        CHECK(classify(build_reduction(inst)).is_orable);
        auto witness = witness_from_solution(inst, sol);
        CHECK(check_hom(witness.cg, build_reduction(inst), witness.hom));
        std::vector<int> expect = sol_indices;
        if (expect.size() == 1)
            expect.push_back(expect[0]);
        CHECK(solution_from_witness(inst, witness.cg, witness.hom).indices == expect);
        ++built;
    }
    CHECK(built >= 15);
}

TEST_CASE("bounded search finds the paper's parameters")
{
    auto witness = bounded_cg_search(paper_instance(), 3, 2);
    REQUIRE(witness.has_value());
    CHECK(witness->params == CorresponderParams{3, 2, {2}, {1}});
    CHECK(check_hom(witness->cg, build_reduction(paper_instance()), witness->hom));
}

TEST_CASE("bounded search agrees with the brute solver on tiny instances")
{
    std::vector<PcpInstance> pool{
        paper_instance(),
        unsolvable_instance(),
        PcpInstance::from_pairs({{"a", "a"}, {"b", "c"}}),
        PcpInstance::from_pairs({{"a", "ab"}, {"b", "a"}}),
        PcpInstance::from_pairs({{"ab", "a"}, {"b", "bb"}}),
        PcpInstance::from_pairs({{"aa", "a"}, {"b", "ab"}}),
    };
    for (auto & inst : pool) {
        // witnesses with n <= 5, k <= 5 correspond exactly to solutions of
        // length 2..5 whose total top length stays below 6
        bool solvable_small = false;
        for (int len = 2; len <= 5 && ! solvable_small; ++len) {
            std::vector<int> seq(len, 0);
            while (true) {
                PcpSolution candidate{seq};
                if (check_solution(inst, candidate)) {
                    int n = 0;
                    for (int t : seq)
                        n += int(inst.top(t).size());
                    if (n <= 5) {
                        solvable_small = true;
                        break;
                    }
                }
                int pos = len - 1;
                while (pos >= 0 && seq[pos] == inst.size() - 1)
                    seq[pos--] = 0;
                if (pos < 0)
                    break;
                ++seq[pos];
            }
        }
        auto witness = bounded_cg_search(inst, 5, 5);
        CHECK(witness.has_value() == solvable_small);
        if (witness)
            CHECK(check_solution(inst,
                solution_from_witness(inst, witness->cg, witness->hom)));
    }
}

TEST_CASE("unsolvable negative control finds no witness up to n=6")
{
    CHECK(! bounded_cg_search(unsolvable_instance(), 6, 6).has_value());
}

TEST_CASE("param space is canonically ordered")
{
    auto space = cg_param_space(4, 3);
    REQUIRE(! space.empty());
    for (std::size_t i = 1; i < space.size(); ++i) {
        auto & a = space[i - 1];
        auto & b = space[i];
        bool ordered = a.n < b.n ||
            (a.n == b.n && (a.k < b.k ||
                (a.k == b.k && (a.u < b.u || (a.u == b.u && a.l < b.l)))));
        CHECK(ordered);
    }
    for (auto & p : space)
        CHECK_NOTHROW(p.validate());
}

}
