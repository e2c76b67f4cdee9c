#ifndef RGC_PATHS_HPP
#define RGC_PATHS_HPP

#include "rgc/graph.hpp"
#include "rgc/hom.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rgc {

// Alternating node/label sequence: nodes[i] -labels[i]-> nodes[i+1], labels
// over {1,2} selecting the relation.
struct Path {
    std::vector<int> nodes;
    std::vector<int> labels;
};

bool is_valid_path(const Graph & g, const Path & p);

// The label word of a path; empty for a single-node path.
std::string word(const Path & p);

// True iff the path runs from root to null. Throws PreconditionError when p
// is not a path of g.
bool is_slice(const Graph & g, const Path & p);

// Node-wise image of a path under a homomorphism; labels are preserved.
Path map_path(const Graph & source, const Graph & target, const Homomorphism & h,
    const Path & p);

// Regular expressions over the alphabet {1,2}: literals `1` `2`, epsilon
// `ε`, juxtaposition or `·` for concatenation, `|` for union, `*`, `()`.
struct Regex {
    enum class Kind { empty, epsilon, literal, concat, alternative, star };
    Kind kind;
    int letter = 0; // for literal
    std::shared_ptr<Regex> left, right;
};

Regex parse_regex(std::string_view text);
std::string to_string(const Regex & e);

// Thompson-constructed NFA over {1,2}.
struct Nfa {
    struct State {
        std::array<std::vector<int>, 2> step; // by letter-1
        std::vector<int> eps;
    };
    std::vector<State> states;
    int start = 0;
    int accept = 0;
};

Nfa thompson(const Regex & e);
bool nfa_accepts(const Nfa & nfa, std::string_view w);

// True iff some slice of g has its word in the language of e. Decided by a
// product of the graph's slice automaton (states = nodes, initial root,
// accepting null) with the regex NFA.
bool has_slice_matching(const Graph & g, const Regex & e);

// A shortest witness slice, when one exists.
std::optional<Path> find_slice_matching(const Graph & g, const Regex & e);

std::string render_path(const Graph & g, const Path & p);

}

#endif
