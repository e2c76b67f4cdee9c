#ifndef RGC_FAMILIES_HPP
#define RGC_FAMILIES_HPP

#include "rgc/graph.hpp"

#include <cstddef>
#include <functional>
#include <limits>
#include <string_view>
#include <vector>

namespace rgc {

// Grid of cells (i,j), 1-based: s1 steps right (last column to null), s2
// steps down (last row to null), root is cell (1,1).
Graph gen_grid(int rows, int cols);

// Corresponder graph parameters: split points 0 = u_0 < u_1 < ... < u_{k-1} < n
// for the U-spine and likewise l for the L-spine (u, l hold the k-1
// nontrivial entries).
struct CorresponderParams {
    int n = 0;
    int k = 0;
    std::vector<int> u;
    std::vector<int> l;

    void validate() const; // throws PreconditionError

    bool operator==(const CorresponderParams &) const = default;
};

// The corresponder graph CG(n, k, u, l): C-spine of 2k nodes, U- and
// L-spines of 2n nodes each, s2 cross edges determined by the split points.
// Always a heap.
Graph gen_cg(const CorresponderParams & params);

// List spelling w along the labeled edges, every unused edge to null; the
// empty word gives the minimal heap.
Graph gen_list(std::string_view w);

struct HeapEnumConfig {
    int max_nodes = 0;  // plain (non-special) node budget
    bool dedupe = true; // one representative per isomorphism class
};

// Streams every heap with at most max_nodes plain nodes, smaller first, in a
// fixed canonical order. With dedupe, each isomorphism class appears once,
// represented by its lexicographically least serialization over relabelings;
// without, every labeled heap over ids h1..hm appears. The callback returns
// false to stop; for_each_heap returns false iff stopped early.
bool for_each_heap(const HeapEnumConfig & cfg, const std::function<bool(const Graph &)> & f);

std::vector<Graph> collect_heaps(const HeapEnumConfig & cfg,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

namespace detail {

    // One unit of the deduped scan for exactly m plain nodes: the choices
    // for root's two successor slots. Partition order follows the canonical
    // enumeration order.
    struct HeapScanPart {
        int m;
        int root_s1;
        int root_s2;
    };

    std::vector<HeapScanPart> heap_scan_parts(int m);

    bool scan_heap_part(const HeapScanPart & part, const std::function<bool(const Graph &)> & f);

}

}

#endif
