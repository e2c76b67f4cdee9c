// Compares the serial reference searches against their OpenMP variants and
// verifies they produce identical results.

#include "rgc/families.hpp"
#include "rgc/graph.hpp"
#include "rgc/hom.hpp"
#include "rgc/implication.hpp"
#include "rgc/parallel.hpp"
#include "rgc/pcp.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>

using namespace rgc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Graph random_graph(std::mt19937 & rng, int plain, int fanout_max = 2)
{
    GraphBuilder b;
    std::vector<std::string> ids{"root"};
    for (int i = 0; i < plain; ++i) {
        ids.push_back("n" + std::to_string(i));
        b.declare_node(ids.back());
    }
    std::vector<std::string> targets = ids;
    targets.push_back("null");
    for (auto & from : ids)
        for (auto rel : all_rels) {
            int fanout = 1 + int(rng() % fanout_max);
            for (int i = 0; i < fanout; ++i)
                b.add_edge(rel, from, targets[rng() % targets.size()]);
        }
    return std::move(b).validate();
}

void report(const char * name, double serial_s, double parallel_s, bool equal)
{
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   results %s\n",
        name, serial_s, parallel_s, parallel_s > 0 ? serial_s / parallel_s : 0.0,
        equal ? "equal" : "DIFFER");
}

int run(bool smoke)
{
    int threads = hardware_threads();
    std::printf("threads: %d%s\n", threads, smoke ? " (smoke sizes)" : "");
    bool all_equal = true;

    {
        // full heap scan: the pair implies, so no counterexample exists and
        // the search visits every heap up to the bound
        std::mt19937 rng(31001);
        Graph g = random_graph(rng, 3);
        int bound = smoke ? 3 : 4;
        auto t0 = Clock::now();
        auto serial = find_heap_counterexample(g, g, bound);
        double serial_s = seconds_since(t0);
        t0 = Clock::now();
        auto parallel = find_heap_counterexample_parallel(g, g, bound, threads);
        double parallel_s = seconds_since(t0);
        bool equal = serial.has_value() == parallel.has_value() &&
            (! serial || *serial == *parallel);
        all_equal = all_equal && equal;
        report("heap-counterexample scan", serial_s, parallel_s, equal);
    }

    {
        // unsolvable instance: the parameter space is exhausted
        auto inst = PcpInstance::from_pairs({{"ab", "a"}, {"ba", "b"}});
        int n_max = smoke ? 4 : 8;
        auto t0 = Clock::now();
        auto serial = bounded_cg_search(inst, n_max, n_max);
        double serial_s = seconds_since(t0);
        t0 = Clock::now();
        auto parallel = bounded_cg_search_parallel(inst, n_max, n_max, threads);
        double parallel_s = seconds_since(t0);
        bool equal = serial.has_value() == parallel.has_value();
        all_equal = all_equal && equal;
        report("cg parameter search", serial_s, parallel_s, equal);
    }

    {
        // full homomorphism enumeration: the source is the target with most
        // edges dropped, so the space is large and nonempty
        std::mt19937 rng(31002);
        int tgt_plain = smoke ? 6 : 12;
        Graph t = random_graph(rng, tgt_plain, 4);
        GraphBuilder gb;
        for (int v = Graph::first_plain; v < t.node_count(); ++v)
            gb.declare_node(t.id(v));
        for (auto r : all_rels)
            for (auto [from, to] : t.edges(r))
                if (from != Graph::null_node && rng() % 6 == 0)
                    gb.add_edge(r, t.id(from), t.id(to));
        Graph g = std::move(gb).validate();
        auto t0 = Clock::now();
        auto serial = enumerate_homs(g, t);
        double serial_s = seconds_since(t0);
        t0 = Clock::now();
        auto parallel = enumerate_homs_parallel(g, t, threads);
        double parallel_s = seconds_since(t0);
        bool equal = serial.size() == parallel.size();
        for (std::size_t i = 0; equal && i < serial.size(); ++i)
            equal = serial[i].mapping == parallel[i].mapping;
        all_equal = all_equal && equal;
        std::printf("hom enumeration: %zu homs found\n", serial.size());
        report("hom enumeration", serial_s, parallel_s, equal);
    }

    return all_equal ? 0 : 1;
}

}

int main(int argc, char ** argv)
{
    bool smoke = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--smoke") == 0)
            smoke = true;
    return run(smoke);
}
