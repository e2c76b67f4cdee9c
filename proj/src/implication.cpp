#include "rgc/implication.hpp"
#include "rgc/errors.hpp"
#include "rgc/families.hpp"
#include "rgc/heap_sat.hpp"
#include "rgc/hom.hpp"
#include "rgc/parallel.hpp"

#include <algorithm>

namespace rgc {

bool implies_over_graphs(const Graph & g1, const Graph & g2)
{
    return find_hom(g1, g2).has_value();
}

bool implies_sufficient(const Graph & g1, const Graph & g2)
{
    return find_hom(g1, g2).has_value();
}

std::optional<Graph> find_heap_counterexample(const Graph & g1, const Graph & g2,
    int max_plain_nodes)
{
    std::optional<Graph> found;
    for_each_heap({max_plain_nodes, true}, [&](const Graph & h) {
        if (find_hom(h, g1) && ! find_hom(h, g2)) {
            found = h;
            return false;
        }
        return true;
    });
    return found;
}

namespace {
    // The slice languages the undecidability proof tests against.
    const std::vector<std::string> & certificate_pool()
    {
        static const std::vector<std::string> pool{"1*", "121*", "1221*", "12(21)*"};
        return pool;
    }
}

ImpliesVerdict check_implies(const Graph & g1, const Graph & g2, const ImpliesOptions & opts)
{
    ImpliesVerdict verdict;
    verdict.bound = opts.max_plain_nodes;
    if (implies_sufficient(g1, g2)) {
        verdict.kind = ImpliesVerdict::Kind::valid_sufficient;
        return verdict;
    }

    if (opts.regex_shortcut) {
        // A heap witness of g1 whose slice language hits a regex that g2's
        // cannot is already a counterexample: mapping it into g2 would give
        // g2 such a slice.
        auto sat = sat_over_heaps(g1);
        if (sat.satisfiable) {
            for (auto & pattern : certificate_pool()) {
                Regex e = parse_regex(pattern);
                if (has_slice_matching(*sat.witness, e) && ! has_slice_matching(g2, e)) {
                    verdict.kind = ImpliesVerdict::Kind::counterexample;
                    verdict.counterexample = *sat.witness;
                    verdict.certificate_regex = pattern;
                    return verdict;
                }
            }
        }
    }

    auto cx = opts.threads > 1
        ? find_heap_counterexample_parallel(g1, g2, opts.max_plain_nodes, opts.threads)
        : find_heap_counterexample(g1, g2, opts.max_plain_nodes);
    if (cx) {
        verdict.kind = ImpliesVerdict::Kind::counterexample;
        verdict.counterexample = std::move(cx);
    }
    else
        verdict.kind = ImpliesVerdict::Kind::unknown;
    return verdict;
}

EquivVerdict equiv_bounded(const Graph & g1, const Graph & g2, int max_plain_nodes)
{
    EquivVerdict verdict;
    verdict.bound = max_plain_nodes;
    if (auto cx = find_heap_counterexample(g1, g2, max_plain_nodes)) {
        verdict.direction = 1;
        verdict.counterexample = std::move(cx);
        return verdict;
    }
    if (auto cx = find_heap_counterexample(g2, g1, max_plain_nodes)) {
        verdict.direction = 2;
        verdict.counterexample = std::move(cx);
        return verdict;
    }
    verdict.equivalent = true;
    return verdict;
}

Graph invariant_gadget(const Graph & g1, const Graph & g2)
{
    for (auto * g : {&g1, &g2}) {
        if (g->is_empty())
            throw PreconditionError("invariant_gadget: empty operand");
        if (! classify(*g).is_orable)
            throw PreconditionError("invariant_gadget: operands must be orable");
        for (auto r : all_rels)
            if (! g->predecessors(r, Graph::root_node).empty())
                throw PreconditionError("invariant_gadget: operands may not have edges into root");
    }

    // Operand nodes are kept apart by unconditional suffixes; the operand
    // roots become plain nodes below the fresh branch nodes a and b.
    auto rename = [](const Graph & g, int v, const char * suffix) -> std::string {
        if (v == Graph::null_node)
            return "null";
        return g.id(v) + suffix;
    };

    GraphBuilder b;
    b.declare_node("a");
    b.declare_node("b");
    for (int v = Graph::root_node; v < g1.node_count(); ++v)
        b.declare_node(rename(g1, v, "#1"));
    for (int v = Graph::root_node; v < g2.node_count(); ++v)
        b.declare_node(rename(g2, v, "#2"));

    b.add_edge(Rel::s1, "root", "a");
    b.add_edge(Rel::s1, "root", "b");
    b.add_edge(Rel::s1, "a", "root#1");
    b.add_edge(Rel::s1, "b", "root#2");
    b.add_edge(Rel::s2, "root", "null");
    b.add_edge(Rel::s2, "a", "root");
    b.add_edge(Rel::s2, "b", "null");

    auto copy_edges = [&](const Graph & g, const char * suffix) {
        for (auto r : all_rels)
            for (auto [from, to] : g.edges(r)) {
                if (from == Graph::null_node)
                    continue;
                b.add_edge(r, rename(g, from, suffix), rename(g, to, suffix));
            }
    };
    copy_edges(g1, "#1");
    copy_edges(g2, "#2");
    return std::move(b).validate();
}

AssignResult apply_assignment(const Graph & heap, AssignTarget target)
{
    if (! classify(heap).is_heap)
        throw PreconditionError("apply_assignment: input must be a heap");

    int x = heap.successors(Rel::s1, Graph::root_node)[0];
    int new_target = target == AssignTarget::null_node ? Graph::null_node : Graph::root_node;
    if (x == Graph::null_node || heap.successors(Rel::s2, x)[0] == new_target)
        return {heap, true};

    // redirect, then drop whatever became unreachable
    std::array<std::vector<int>, 2> succ;
    for (int r = 0; r < 2; ++r) {
        succ[r].resize(heap.node_count());
        for (int v = 0; v < heap.node_count(); ++v)
            succ[r][v] = heap.successors(static_cast<Rel>(r), v)[0];
    }
    succ[static_cast<int>(Rel::s2)][x] = new_target;

    std::vector<bool> seen(heap.node_count(), false);
    seen[Graph::root_node] = true;
    std::vector<int> stack{Graph::root_node};
    while (! stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int r = 0; r < 2; ++r) {
            int w = succ[r][v];
            if (! seen[w]) {
                seen[w] = true;
                if (w != Graph::null_node)
                    stack.push_back(w);
            }
        }
    }

    GraphBuilder builder;
    for (int v = Graph::first_plain; v < heap.node_count(); ++v)
        if (seen[v])
            builder.declare_node(heap.id(v));
    for (int v = Graph::root_node; v < heap.node_count(); ++v) {
        if (! seen[v])
            continue;
        for (int r = 0; r < 2; ++r)
            builder.add_edge(static_cast<Rel>(r), heap.id(v), heap.id(succ[r][v]));
    }
    return {std::move(builder).validate(), false};
}

}
