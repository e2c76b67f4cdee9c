#ifndef RGC_EMSOL_HPP
#define RGC_EMSOL_HPP

#include "rgc/graph.hpp"

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace rgc {

// The partition-form encoding of "homomorphic to a fixed target": one color
// per target node (color 0 = null, color 1 = root), and per color/relation
// the set of colors its successors may take.
struct EmsolFormula {
    int k = 0;
    std::vector<std::string> color_ids; // k entries; informational
    std::array<std::vector<std::vector<int>>, 2> allowed; // [rel][color] -> sorted colors

    bool operator==(const EmsolFormula &) const = default;
};

EmsolFormula emit_formula(const Graph & target);

// Renders/reads the ASCII text form (EXISTS/partit/singl header plus one
// successor clause per relation and color). render_formula(parse_formula(t))
// is the canonical form of t.
std::string render_formula(const EmsolFormula & f);
EmsolFormula parse_formula(std::string_view text);

// Direct exhaustive evaluation over a small graph: some coloring with
// null -> 0, root -> 1, plain nodes in colors 2..k-1 satisfying every
// successor clause. Throws PreconditionError when the graph has more than
// max_plain_nodes plain nodes.
bool eval_formula(const Graph & g, const EmsolFormula & f, int max_plain_nodes = 6);

// The relaxed form: arbitrary propositional combinations per relation in
// which the edge atom occurs only negatively. Emitted and parsed, never
// evaluated.
struct FlexExpr {
    enum class Kind {
        edge,        // s1(x,y) or s2(x,y), fixed by which clause it sits in
        var_x,       // Xi(x)
        var_y,       // Xi(y)
        truth,       // TRUE / FALSE
        negation,
        conjunction,
        disjunction,
        implication
    };
    Kind kind;
    int index = 0;      // var_*
    bool value = false; // truth
    std::shared_ptr<FlexExpr> left, right;
};

struct FlexFormula {
    int k = 0;
    FlexExpr b1, b2;
};

bool flex_equal(const FlexExpr & a, const FlexExpr & b);

// Throws PreconditionError on malformed structure: an edge atom in positive
// position, a variable index out of range.
std::string render_flexible(const FlexFormula & f);
FlexFormula parse_flexible(std::string_view text);

}

#endif
