#ifndef RGC_IMPLICATION_HPP
#define RGC_IMPLICATION_HPP

#include "rgc/graph.hpp"
#include "rgc/paths.hpp"

#include <optional>
#include <string>

namespace rgc {

// Over all graphs, implication is exactly homomorphism existence.
bool implies_over_graphs(const Graph & g1, const Graph & g2);

// Sound one-sided test over any class: a homomorphism g1 -> g2 forces the
// implication. A false answer is inconclusive over heaps (no complete
// procedure exists).
bool implies_sufficient(const Graph & g1, const Graph & g2);

// First heap H in enumeration order (at most max_plain_nodes plain nodes)
// with H -> g1 but not H -> g2, or nullopt when the bound is exhausted.
std::optional<Graph> find_heap_counterexample(const Graph & g1, const Graph & g2,
    int max_plain_nodes);

struct ImpliesVerdict {
    enum class Kind { valid_sufficient, counterexample, unknown };
    Kind kind;
    std::optional<Graph> counterexample;
    std::optional<std::string> certificate_regex; // set when the slice-language
                                                  // shortcut found the witness
    int bound = 0;
};

struct ImpliesOptions {
    int max_plain_nodes = 4;
    int threads = 1;
    bool regex_shortcut = true;
};

// Verdict-level implication check: sufficiency first, then a slice-language
// certificate on the heap witness of g1 (a pool of regexes from the
// undecidability proof), then bounded counterexample search.
ImpliesVerdict check_implies(const Graph & g1, const Graph & g2, const ImpliesOptions & opts);

struct EquivVerdict {
    bool equivalent = false;      // no counterexample up to the bound
    int direction = 0;            // 1: g1 implies g2 fails, 2: converse fails
    std::optional<Graph> counterexample;
    int bound = 0;
};

// Bounded equivalence: counterexample search in both directions.
EquivVerdict equiv_bounded(const Graph & g1, const Graph & g2, int max_plain_nodes);

// The program-checking construction: a fresh root with two s1 branches a, b
// leading into the (renamed) operand graphs; a's s2 returns to root, b's
// drops to null. Requires both operands orable with no edges into their
// roots.
Graph invariant_gadget(const Graph & g1, const Graph & g2);

enum class AssignTarget { null_node, root_node };

struct AssignResult {
    Graph heap;
    bool no_op = false;
};

// The heap transformer of the statement `root.1.2 := null`: redirects the s2
// edge of root's s1-successor (to root instead under the root_node variant)
// and drops any nodes that become unreachable. null itself is immutable; the
// result is always a heap.
AssignResult apply_assignment(const Graph & heap, AssignTarget target = AssignTarget::null_node);

}

#endif
