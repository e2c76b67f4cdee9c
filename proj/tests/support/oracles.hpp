#ifndef RGC_TEST_ORACLES_HPP
#define RGC_TEST_ORACLES_HPP

#include "rgc/graph.hpp"
#include "rgc/hom.hpp"

#include <vector>

namespace rgc::test {

// Exhaustive homomorphism enumeration by trying every assignment of plain
// source nodes to plain target nodes (|V'|-2)^(|V|-2) and checking the
// definition directly. Independent of the search code path on purpose.
inline std::vector<Homomorphism> brute_force_homs(const Graph & source, const Graph & target)
{
    std::vector<Homomorphism> found;
    int sn = source.node_count(), tn = target.node_count();
    int vars = sn - 2, values = tn - 2;

    Homomorphism h;
    h.mapping.assign(sn, -1);
    h.mapping[Graph::null_node] = Graph::null_node;
    h.mapping[Graph::root_node] = Graph::root_node;

    if (vars == 0) {
        if (check_hom(source, target, h))
            found.push_back(h);
        return found;
    }
    if (values == 0)
        return found;

    std::vector<int> odometer(vars, 0);
    while (true) {
        for (int i = 0; i < vars; ++i)
            h.mapping[Graph::first_plain + i] = Graph::first_plain + odometer[i];
        if (check_hom(source, target, h))
            found.push_back(h);
        int pos = vars - 1;
        while (pos >= 0 && odometer[pos] == values - 1)
            odometer[pos--] = 0;
        if (pos < 0)
            break;
        ++odometer[pos];
    }
    return found;
}

inline bool brute_force_hom_exists(const Graph & source, const Graph & target)
{
    return ! brute_force_homs(source, target).empty();
}

}

#endif
