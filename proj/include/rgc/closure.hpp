#ifndef RGC_CLOSURE_HPP
#define RGC_CLOSURE_HPP

#include "rgc/graph.hpp"

namespace rgc {

// Cartesian product: the conjunction of two constraint graphs. Nodes are
// pairs (specials paired with specials, plain with plain; mixed pairs are
// dropped), edges require componentwise membership. Pair ids render as
// "⟨a|b⟩".
Graph product(const Graph & a, const Graph & b);

// Graph sum: the disjunction of two orable constraint graphs over heaps.
// Plain node sets are kept disjoint by suffixing "#1"/"#2" on id collisions.
// Throws NotOrableError when either operand is not orable.
Graph sum(const Graph & a, const Graph & b);

}

#endif
