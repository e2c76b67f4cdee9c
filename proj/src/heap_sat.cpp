#include "rgc/heap_sat.hpp"
#include "rgc/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace rgc {

std::string to_string(RemovalReason r)
{
    switch (r) {
    case RemovalReason::unreachable: return "unreachable";
    case RemovalReason::missing_s1: return "missing-s1";
    case RemovalReason::missing_s2: return "missing-s2";
    }
    return "?";
}

namespace {

// Working copy that supports node removal. Everything is keyed by id so the
// trace and the deterministic tie-breaks read naturally.
struct MutableGraph {
    std::set<std::string> nodes;
    std::array<std::map<std::string, std::set<std::string>>, 2> succ;

    explicit MutableGraph(const Graph & g)
    {
        for (int v = 0; v < g.node_count(); ++v) {
            nodes.insert(g.id(v));
            for (auto r : all_rels)
                for (int w : g.successors(r, v))
                    succ[static_cast<int>(r)][g.id(v)].insert(g.id(w));
        }
    }

    void remove(const std::string & id)
    {
        nodes.erase(id);
        for (auto & rel : succ) {
            rel.erase(id);
            for (auto & [from, tos] : rel)
                tos.erase(id);
        }
    }

    std::set<std::string> reachable() const
    {
        std::set<std::string> seen;
        if (! nodes.contains("root"))
            return seen;
        std::deque<std::string> queue{"root"};
        seen.insert("root");
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto & rel : succ) {
                auto it = rel.find(v);
                if (it == rel.end())
                    continue;
                for (auto & w : it->second)
                    if (seen.insert(w).second)
                        queue.push_back(w);
            }
        }
        return seen;
    }

    Graph freeze() const
    {
        if (nodes.empty())
            return Graph::empty_graph();
        GraphBuilder builder;
        for (auto & id : nodes)
            if (id != "root" && id != "null")
                builder.declare_node(id);
        for (int r = 0; r < 2; ++r)
            for (auto & [from, tos] : succ[r])
                for (auto & to : tos)
                    if (from != "null")
                        builder.add_edge(static_cast<Rel>(r), from, to);
        return std::move(builder).validate();
    }
};

}

CleanupResult graph_cleanup(const Graph & g)
{
    if (g.is_empty())
        return {Graph::empty_graph(), {}};

    MutableGraph work(g);
    std::vector<CleanupStep> trace;

    while (true) {
        auto reach = work.reachable();
        bool root_alive = work.nodes.contains("root");
        bool removed = false;
        // null stays while root is alive: every heap maps its null there
        // regardless of reachability, and an unreachable null has no
        // reachable dependents. Once root is gone everything drains.
        for (auto & id : work.nodes)
            if (! reach.contains(id) && (id != "null" || ! root_alive)) {
                trace.push_back({id, RemovalReason::unreachable});
                work.remove(id);
                removed = true;
                break;
            }
        if (removed)
            continue;
        for (auto & id : work.nodes) {
            bool no_s1 = ! work.succ[0].contains(id) || work.succ[0].at(id).empty();
            bool no_s2 = ! work.succ[1].contains(id) || work.succ[1].at(id).empty();
            if (no_s1 || no_s2) {
                trace.push_back({id,
                    no_s1 ? RemovalReason::missing_s1 : RemovalReason::missing_s2});
                work.remove(id);
                removed = true;
                break;
            }
        }
        if (! removed)
            break;
    }

    // Fixpoints are either empty or contain both root and null: losing root
    // makes everything unreachable, and null only goes in that cascade.
    return {work.freeze(), std::move(trace)};
}

Graph extract_heap(const Graph & g)
{
    if (g.is_empty())
        throw PreconditionError("extract_heap: empty graph");
    auto reach = reachable_from_root(g);
    for (int v = 0; v < g.node_count(); ++v) {
        if (v != Graph::null_node && ! reach[v])
            throw PreconditionError("extract_heap: input is not a cleanup fixpoint");
        for (auto r : all_rels)
            if (g.successors(r, v).empty())
                throw PreconditionError("extract_heap: input is not a cleanup fixpoint");
    }

    auto pick = [&](Rel r, int v) {
        auto s = g.successors(r, v);
        int best = s[0];
        for (int w : s)
            if (g.id(w) < g.id(best))
                best = w;
        return best;
    };

    std::vector<bool> marked(g.node_count(), false);
    std::vector<int> stack{Graph::root_node};
    GraphBuilder builder;
    std::vector<std::pair<Rel, std::pair<int, int>>> selected;
    while (! stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (marked[v])
            continue;
        marked[v] = true;
        for (auto r : all_rels) {
            int w = pick(r, v);
            selected.push_back({r, {v, w}});
            if (! marked[w])
                stack.push_back(w);
        }
    }

    for (int v = Graph::first_plain; v < g.node_count(); ++v)
        if (marked[v])
            builder.declare_node(g.id(v));
    for (auto & [r, edge] : selected)
        if (edge.first != Graph::null_node)
            builder.add_edge(r, g.id(edge.first), g.id(edge.second));
    return std::move(builder).validate();
}

SatResult sat_over_heaps(const Graph & g)
{
    auto cleaned = graph_cleanup(g);
    SatResult result;
    result.trace = std::move(cleaned.trace);
    if (cleaned.graph.is_empty())
        return result;
    result.satisfiable = true;
    result.witness = extract_heap(cleaned.graph);
    return result;
}

}
