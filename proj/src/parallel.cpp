#include "rgc/parallel.hpp"
#include "rgc/families.hpp"
#include "rgc/implication.hpp"

#include <atomic>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rgc {

int hardware_threads()
{
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : int(n);
}

std::optional<Graph> find_heap_counterexample_parallel(const Graph & g1, const Graph & g2,
    int max_plain_nodes, int threads)
{
    if (threads <= 1)
        return find_heap_counterexample(g1, g2, max_plain_nodes);

    for (int m = 0; m <= max_plain_nodes; ++m) {
        auto parts = detail::heap_scan_parts(m);
        int nparts = int(parts.size());
        std::vector<std::optional<Graph>> hits(nparts);
        std::atomic<int> best{nparts};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
        for (int i = 0; i < nparts; ++i) {
            if (i > best.load(std::memory_order_relaxed))
                continue;
            detail::scan_heap_part(parts[i], [&](const Graph & h) {
                if (i > best.load(std::memory_order_relaxed))
                    return false;
                if (find_hom(h, g1) && ! find_hom(h, g2)) {
                    hits[i] = h;
                    int expected = best.load();
                    while (i < expected && ! best.compare_exchange_weak(expected, i))
                        ;
                    return false;
                }
                return true;
            });
        }

        // the parts are in canonical scan order, so the lowest hit index is
        // the heap the serial scan would have found first
        for (int i = 0; i < nparts; ++i)
            if (hits[i])
                return hits[i];
    }
    return std::nullopt;
}

std::optional<CgWitness> bounded_cg_search_parallel(const PcpInstance & inst,
    int n_max, int k_max, int threads)
{
    if (threads <= 1)
        return bounded_cg_search(inst, n_max, k_max);

    Graph reduction = build_reduction(inst);
    auto space = cg_param_space(n_max, k_max);
    int total = int(space.size());
    std::vector<std::optional<Homomorphism>> hits(total);
    std::atomic<int> best{total};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (int i = 0; i < total; ++i) {
        if (i > best.load(std::memory_order_relaxed))
            continue;
        Graph cg = gen_cg(space[i]);
        if (auto h = find_hom(cg, reduction)) {
            hits[i] = std::move(h);
            int expected = best.load();
            while (i < expected && ! best.compare_exchange_weak(expected, i))
                ;
        }
    }

    for (int i = 0; i < total; ++i)
        if (hits[i])
            return CgWitness{space[i], gen_cg(space[i]), std::move(*hits[i])};
    return std::nullopt;
}

std::vector<Homomorphism> enumerate_homs_parallel(const Graph & source, const Graph & target,
    int threads, std::size_t limit)
{
    if (threads <= 1 || source.node_count() <= Graph::first_plain || target.is_empty())
        return enumerate_homs(source, target, limit);

    // partition on the first plain source node's image; buckets concatenate
    // in value order, which is exactly the canonical enumeration order
    int values = target.node_count() - Graph::first_plain;
    std::vector<std::vector<Homomorphism>> buckets(std::max(values, 0));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (int i = 0; i < values; ++i)
        buckets[i] = detail::enumerate_homs_first_fixed(source, target,
            Graph::first_plain + i, limit);

    std::vector<Homomorphism> result;
    for (auto & bucket : buckets)
        for (auto & h : bucket) {
            if (result.size() == limit)
                return result;
            result.push_back(std::move(h));
        }
    return result;
}

}
