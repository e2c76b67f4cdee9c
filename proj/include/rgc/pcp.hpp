#ifndef RGC_PCP_HPP
#define RGC_PCP_HPP

#include "rgc/families.hpp"
#include "rgc/graph.hpp"
#include "rgc/hom.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rgc {

// A correspondence instance: pairs of nonempty words. Letters are Unicode
// codepoints; equality is exact codepoint equality. Single-pair instances
// are padded with a duplicate pair so the reduction's m >= 2 assumption
// holds (solutions transfer by index collapse).
struct PcpInstance {
    std::vector<std::pair<std::string, std::string>> pairs;

    static PcpInstance from_pairs(std::vector<std::pair<std::string, std::string>> pairs);
    static PcpInstance parse(std::string_view text);
    static PcpInstance load(const std::string & path);

    int size() const { return int(pairs.size()); }

    // Codepoint sequences of word i.
    const std::vector<std::uint32_t> & top(int i) const { return top_[i]; }
    const std::vector<std::uint32_t> & bottom(int i) const { return bottom_[i]; }

private:
    std::vector<std::vector<std::uint32_t>> top_, bottom_;
};

struct PcpSolution {
    std::vector<int> indices;
};

// Concatenation equality over the chosen indices.
bool check_solution(const PcpInstance & inst, const PcpSolution & sol);

// Breadth-first search over index sequences up to max_len, shortest first,
// lexicographic tie-break. Unsolvable instances simply exhaust the bound.
std::optional<PcpSolution> brute_solve_pcp(const PcpInstance & inst, int max_len);

// The reduction graph G: a corresponder graph maps into G exactly when the
// instance has a solution. c-nodes summarize the C-spine (one even/odd pair
// per word pair); a- and b-nodes track word positions of the top and bottom
// words, doubled per position, with extra variants whose s2 points at root
// to mark positions that must absorb a C-anchor.
Graph build_reduction(const PcpInstance & inst);

struct CgWitness {
    CorresponderParams params;
    Graph cg;
    Homomorphism hom; // from cg into build_reduction(inst)
};

// Executable arrow from a solution to a corresponder-graph witness: the
// parameters are the cumulative word lengths, and the homomorphism sends
// spine positions to the word-position nodes they spell. k = 1 solutions are
// doubled to meet the CG parameter constraints.
CgWitness witness_from_solution(const PcpInstance & inst, const PcpSolution & sol);

// Executable arrow back: reads the solution off the images of the even
// C-nodes and re-verifies it. Throws PreconditionError on malformed input.
PcpSolution solution_from_witness(const PcpInstance & inst, const Graph & cg,
    const Homomorphism & hom);

// Tries every corresponder graph with n <= n_max, k <= k_max in canonical
// order (ascending n, then k, then lexicographic split points) and returns
// the first one mapping into the reduction graph.
std::optional<CgWitness> bounded_cg_search(const PcpInstance & inst, int n_max, int k_max);

// All parameter tuples with the given bounds, in canonical search order.
std::vector<CorresponderParams> cg_param_space(int n_max, int k_max);

}

#endif
