#ifndef RGC_HOM_HPP
#define RGC_HOM_HPP

#include "rgc/graph.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace rgc {

// A total node map from a source graph into a target graph. mapping[v] is
// the target index for source index v; -1 marks an unassigned slot (only a
// partially built value may contain it, check_hom rejects such maps).
struct Homomorphism {
    std::vector<int> mapping;

    bool total() const
    {
        for (int v : mapping)
            if (v < 0)
                return false;
        return ! mapping.empty();
    }
};

// Verifies the three homomorphism conditions: edge preservation in both
// relations, h(x) = root' iff x = root, h(x) = null' iff x = null.
// Throws std::invalid_argument when h is not total on the source.
bool check_hom(const Graph & source, const Graph & target, const Homomorphism & h);

// First homomorphism in canonical order, or nullopt. Canonical order is
// lexicographic over the assignments of plain source nodes (in id order),
// with target values compared in id order. Deterministic for fixed input.
std::optional<Homomorphism> find_hom(const Graph & source, const Graph & target);

// All homomorphisms in canonical order, up to limit.
std::vector<Homomorphism> enumerate_homs(const Graph & source, const Graph & target,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

// h2 after h1. Throws std::invalid_argument on domain/codomain size mismatch.
Homomorphism compose(const Graph & source, const Graph & mid, const Graph & target,
    const Homomorphism & h1, const Homomorphism & h2);

Homomorphism identity_hom(const Graph & g);

namespace detail {

    // Enumeration restricted to maps sending the first plain source node to
    // the given target node; used to partition the search space.
    std::vector<Homomorphism> enumerate_homs_first_fixed(const Graph & source,
        const Graph & target, int first_value,
        std::size_t limit = std::numeric_limits<std::size_t>::max());

}

// Witness format: one `<source-id> -> <target-id>` line per node, sorted by
// source id.
std::string render_hom(const Graph & source, const Graph & target, const Homomorphism & h);

}

#endif
