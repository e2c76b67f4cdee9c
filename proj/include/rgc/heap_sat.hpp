#ifndef RGC_HEAP_SAT_HPP
#define RGC_HEAP_SAT_HPP

#include "rgc/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rgc {

enum class RemovalReason { unreachable, missing_s1, missing_s2 };

std::string to_string(RemovalReason r);

struct CleanupStep {
    std::string node;
    RemovalReason reason;

    bool operator==(const CleanupStep &) const = default;
};

struct CleanupResult {
    Graph graph; // possibly the empty graph
    std::vector<CleanupStep> trace;
};

// Deletes unreachable nodes and nodes missing an s1- or s2-successor until
// the graph stabilizes. root and null may be removed too; the result can be
// empty. One node per step, unreachable rule first, lexicographically least
// id first, so the trace is reproducible.
CleanupResult graph_cleanup(const Graph & g);

// Picks one s1- and one s2-successor per node reachable from root
// (lexicographically least target id) and returns that subgraph, which is a
// heap embedding into g by identity. Requires a nonempty cleanup fixpoint.
Graph extract_heap(const Graph & g);

struct SatResult {
    bool satisfiable = false;
    std::optional<Graph> witness; // a heap, present iff satisfiable
    std::vector<CleanupStep> trace;
};

// Satisfiability of g over the class of heaps: cleanup, then extract a heap
// witness unless everything was removed.
SatResult sat_over_heaps(const Graph & g);

}

#endif
