#ifndef RGC_TEST_FIXTURES_HPP
#define RGC_TEST_FIXTURES_HPP

#include "rgc/graph.hpp"

#include <random>
#include <string>
#include <vector>

namespace rgc::test {

inline Graph minimal_heap()
{
    return parse_graph("s1 root null\ns2 root null\n");
}

// The 2.8 disjunction counterexample trio: g1's only heap model is itself,
// likewise g2, and any common weakening also admits g3.
inline Graph paper_g1()
{
    return parse_graph("s1 root null\ns2 root root\n");
}

inline Graph paper_g2()
{
    return parse_graph("s1 root root\ns2 root null\n");
}

inline Graph paper_g3()
{
    return parse_graph("s1 root null\ns2 root null\n");
}

// Deterministic random graphs: `plain` extra nodes, every edge chosen
// independently, occasionally several successors per node, root/null rules
// respected by construction.
inline Graph random_graph(std::mt19937 & rng, int plain, double edge_bias = 0.5)
{
    static const std::vector<std::string> pool{
        "a", "b", "c", "d", "e", "f"};
    GraphBuilder builder;
    std::vector<std::string> ids{"root"};
    for (int i = 0; i < plain; ++i) {
        builder.declare_node(pool[i]);
        ids.push_back(pool[i]);
    }
    std::vector<std::string> targets = ids;
    targets.push_back("null");
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, int(targets.size()) - 1);
    for (auto & from : ids)
        for (auto rel : all_rels) {
            int fanout = coin(rng) < edge_bias ? 1 : (coin(rng) < 0.25 ? 2 : 0);
            for (int i = 0; i < fanout; ++i)
                builder.add_edge(rel, from, targets[pick(rng)]);
        }
    return std::move(builder).validate();
}

// Random graph with the root s2-edge forced to null and no other root
// s2-edges, so the result is orable.
inline Graph random_orable_graph(std::mt19937 & rng, int plain, double edge_bias = 0.5)
{
    while (true) {
        Graph g = random_graph(rng, plain, edge_bias);
        GraphBuilder builder;
        for (int v = Graph::first_plain; v < g.node_count(); ++v)
            builder.declare_node(g.id(v));
        for (auto rel : all_rels)
            for (auto [from, to] : g.edges(rel)) {
                if (from == Graph::null_node)
                    continue;
                if (rel == Rel::s2 && from == Graph::root_node)
                    continue;
                builder.add_edge(rel, g.id(from), g.id(to));
            }
        builder.add_edge(Rel::s2, "root", "null");
        Graph result = std::move(builder).validate();
        if (classify(result).is_orable)
            return result;
    }
}

// Orable graph with no edges into root: the preconditions of the
// program-checking gadget.
inline Graph gadget_operand(std::mt19937 & rng, int plain, double edge_bias = 0.5)
{
    while (true) {
        Graph g = random_orable_graph(rng, plain, edge_bias);
        bool into_root = false;
        for (auto rel : all_rels)
            if (! g.predecessors(rel, Graph::root_node).empty())
                into_root = true;
        if (into_root)
            continue;
        return g;
    }
}

// Random heap: random total successor functions, retried until every plain
// node is reachable.
inline Graph random_heap(std::mt19937 & rng, int plain)
{
    static const std::vector<std::string> pool{
        "a", "b", "c", "d", "e", "f", "g", "h"};
    std::vector<std::string> ids{"root"};
    for (int i = 0; i < plain; ++i)
        ids.push_back(pool[i]);
    std::vector<std::string> targets = ids;
    targets.push_back("null");
    std::uniform_int_distribution<int> pick(0, int(targets.size()) - 1);
    while (true) {
        GraphBuilder builder;
        for (int i = 0; i < plain; ++i)
            builder.declare_node(pool[i]);
        for (auto & from : ids)
            for (auto rel : all_rels)
                builder.add_edge(rel, from, targets[pick(rng)]);
        Graph g = std::move(builder).validate();
        if (classify(g).is_heap)
            return g;
    }
}

}

#endif
