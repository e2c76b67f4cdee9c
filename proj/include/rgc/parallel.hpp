#ifndef RGC_PARALLEL_HPP
#define RGC_PARALLEL_HPP

#include "rgc/graph.hpp"
#include "rgc/hom.hpp"
#include "rgc/pcp.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace rgc {

// OpenMP variants of the partitionable searches. Each returns exactly what
// its serial reference returns: results are reduced to the canonically first
// hit, so output never depends on the thread count. threads <= 1 falls back
// to the serial implementation.

std::optional<Graph> find_heap_counterexample_parallel(const Graph & g1, const Graph & g2,
    int max_plain_nodes, int threads);

std::optional<CgWitness> bounded_cg_search_parallel(const PcpInstance & inst,
    int n_max, int k_max, int threads);

std::vector<Homomorphism> enumerate_homs_parallel(const Graph & source, const Graph & target,
    int threads, std::size_t limit = std::numeric_limits<std::size_t>::max());

int hardware_threads();

}

#endif
