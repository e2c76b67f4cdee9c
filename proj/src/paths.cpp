#include "rgc/paths.hpp"
#include "rgc/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rgc {

bool is_valid_path(const Graph & g, const Path & p)
{
    if (p.nodes.empty() || p.labels.size() + 1 != p.nodes.size())
        return false;
    for (int v : p.nodes)
        if (v < 0 || v >= g.node_count())
            return false;
    for (std::size_t i = 0; i < p.labels.size(); ++i) {
        if (p.labels[i] != 1 && p.labels[i] != 2)
            return false;
        if (! g.has_edge(rel_from_label(p.labels[i]), p.nodes[i], p.nodes[i + 1]))
            return false;
    }
    return true;
}

std::string word(const Path & p)
{
    std::string w;
    for (int l : p.labels)
        w += char('0' + l);
    return w;
}

bool is_slice(const Graph & g, const Path & p)
{
    if (! is_valid_path(g, p))
        throw PreconditionError("is_slice: not a path of the graph");
    return p.nodes.front() == Graph::root_node && p.nodes.back() == Graph::null_node;
}

Path map_path(const Graph & source, const Graph & target, const Homomorphism & h,
    const Path & p)
{
    if (! is_valid_path(source, p))
        throw PreconditionError("map_path: not a path of the source graph");
    Path image;
    image.labels = p.labels;
    image.nodes.reserve(p.nodes.size());
    for (int v : p.nodes)
        image.nodes.push_back(h.mapping[v]);
    if (! is_valid_path(target, image))
        throw PreconditionError("map_path: image is not a path (invalid homomorphism?)");
    return image;
}

namespace {

struct RegexParser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string & msg)
    {
        throw ParseError("regex: " + msg, 1);
    }

    bool eat(std::string_view tok)
    {
        if (text.substr(pos, tok.size()) == tok) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    bool at_end() const { return pos >= text.size(); }

    char peek() const { return at_end() ? '\0' : text[pos]; }

    static Regex make(Regex::Kind k, Regex l = {}, Regex r = {})
    {
        Regex e;
        e.kind = k;
        if (k == Regex::Kind::concat || k == Regex::Kind::alternative) {
            e.left = std::make_shared<Regex>(std::move(l));
            e.right = std::make_shared<Regex>(std::move(r));
        }
        else if (k == Regex::Kind::star)
            e.left = std::make_shared<Regex>(std::move(l));
        return e;
    }

    Regex parse_alternative()
    {
        Regex e = parse_concat();
        while (! at_end() && peek() == '|') {
            ++pos;
            e = make(Regex::Kind::alternative, std::move(e), parse_concat());
        }
        return e;
    }

    Regex parse_concat()
    {
        Regex e = parse_postfix();
        while (! at_end() && peek() != '|' && peek() != ')') {
            eat("·"); // optional explicit concatenation dot
            e = make(Regex::Kind::concat, std::move(e), parse_postfix());
        }
        return e;
    }

    Regex parse_postfix()
    {
        Regex e = parse_atom();
        while (! at_end() && peek() == '*') {
            ++pos;
            e = make(Regex::Kind::star, std::move(e));
        }
        return e;
    }

    Regex parse_atom()
    {
        if (eat("(")) {
            Regex e = parse_alternative();
            if (! eat(")"))
                fail("missing ')'");
            return e;
        }
        if (eat("ε"))
            return make(Regex::Kind::epsilon);
        if (peek() == '1' || peek() == '2') {
            Regex e;
            e.kind = Regex::Kind::literal;
            e.letter = peek() - '0';
            ++pos;
            return e;
        }
        fail(at_end() ? "unexpected end of input"
                      : std::string("unexpected character '") + peek() + "'");
    }
};

}

Regex parse_regex(std::string_view text)
{
    RegexParser parser{text};
    if (parser.at_end())
        parser.fail("empty expression");
    Regex e = parser.parse_alternative();
    if (! parser.at_end())
        parser.fail("trailing input");
    return e;
}

std::string to_string(const Regex & e)
{
    switch (e.kind) {
    case Regex::Kind::empty: return "∅";
    case Regex::Kind::epsilon: return "ε";
    case Regex::Kind::literal: return std::string(1, char('0' + e.letter));
    case Regex::Kind::star: {
        std::string inner = to_string(*e.left);
        if (e.left->kind == Regex::Kind::literal || e.left->kind == Regex::Kind::epsilon)
            return inner + "*";
        return "(" + inner + ")*";
    }
    case Regex::Kind::concat: {
        auto wrap = [](const Regex & sub) {
            std::string s = to_string(sub);
            return sub.kind == Regex::Kind::alternative ? "(" + s + ")" : s;
        };
        return wrap(*e.left) + wrap(*e.right);
    }
    case Regex::Kind::alternative:
        return to_string(*e.left) + "|" + to_string(*e.right);
    }
    return "?";
}

namespace {
    int add_state(Nfa & nfa)
    {
        nfa.states.emplace_back();
        return int(nfa.states.size()) - 1;
    }

    // Returns (start, accept) of the fragment for e.
    std::pair<int, int> build(Nfa & nfa, const Regex & e)
    {
        switch (e.kind) {
        case Regex::Kind::empty: {
            int s = add_state(nfa), t = add_state(nfa);
            return {s, t};
        }
        case Regex::Kind::epsilon: {
            int s = add_state(nfa), t = add_state(nfa);
            nfa.states[s].eps.push_back(t);
            return {s, t};
        }
        case Regex::Kind::literal: {
            int s = add_state(nfa), t = add_state(nfa);
            nfa.states[s].step[e.letter - 1].push_back(t);
            return {s, t};
        }
        case Regex::Kind::concat: {
            auto [ls, lt] = build(nfa, *e.left);
            auto [rs, rt] = build(nfa, *e.right);
            nfa.states[lt].eps.push_back(rs);
            return {ls, rt};
        }
        case Regex::Kind::alternative: {
            int s = add_state(nfa), t = add_state(nfa);
            auto [ls, lt] = build(nfa, *e.left);
            auto [rs, rt] = build(nfa, *e.right);
            nfa.states[s].eps.push_back(ls);
            nfa.states[s].eps.push_back(rs);
            nfa.states[lt].eps.push_back(t);
            nfa.states[rt].eps.push_back(t);
            return {s, t};
        }
        case Regex::Kind::star: {
            int s = add_state(nfa), t = add_state(nfa);
            auto [is, it] = build(nfa, *e.left);
            nfa.states[s].eps.push_back(is);
            nfa.states[s].eps.push_back(t);
            nfa.states[it].eps.push_back(is);
            nfa.states[it].eps.push_back(t);
            return {s, t};
        }
        }
        throw std::logic_error("unreachable");
    }

    void eps_closure(const Nfa & nfa, std::vector<bool> & set)
    {
        std::deque<int> queue;
        for (int s = 0; s < int(set.size()); ++s)
            if (set[s])
                queue.push_back(s);
        while (! queue.empty()) {
            int s = queue.front();
            queue.pop_front();
            for (int t : nfa.states[s].eps)
                if (! set[t]) {
                    set[t] = true;
                    queue.push_back(t);
                }
        }
    }
}

Nfa thompson(const Regex & e)
{
    Nfa nfa;
    auto [s, t] = build(nfa, e);
    nfa.start = s;
    nfa.accept = t;
    return nfa;
}

bool nfa_accepts(const Nfa & nfa, std::string_view w)
{
    std::vector<bool> current(nfa.states.size(), false);
    current[nfa.start] = true;
    eps_closure(nfa, current);
    for (char c : w) {
        std::vector<bool> next(nfa.states.size(), false);
        for (int s = 0; s < int(current.size()); ++s)
            if (current[s])
                for (int t : nfa.states[s].step[c - '1'])
                    next[t] = true;
        eps_closure(nfa, next);
        current = std::move(next);
    }
    return current[nfa.accept];
}

namespace {
    // BFS over (graph node, NFA state) product pairs; parents give a
    // shortest witness slice.
    struct ProductSearch {
        const Graph & g;
        const Nfa & nfa;
        std::vector<int> parent;     // encoded pair index, -1 unexplored
        std::vector<int> parent_lab; // label used to reach (0 for eps moves)

        int encode(int node, int state) const
        {
            return node * int(nfa.states.size()) + state;
        }

        std::optional<Path> run()
        {
            int total = g.node_count() * int(nfa.states.size());
            parent.assign(total, -1);
            parent_lab.assign(total, 0);
            std::deque<int> queue;

            int start = encode(Graph::root_node, nfa.start);
            parent[start] = start;
            queue.push_back(start);
            while (! queue.empty()) {
                int cur = queue.front();
                queue.pop_front();
                int node = cur / int(nfa.states.size());
                int state = cur % int(nfa.states.size());
                if (node == Graph::null_node && state == nfa.accept)
                    return reconstruct(cur);
                for (int t : nfa.states[state].eps)
                    visit(queue, cur, encode(node, t), 0);
                for (auto r : all_rels)
                    for (int w : g.successors(r, node))
                        for (int t : nfa.states[state].step[static_cast<int>(r)])
                            visit(queue, cur, encode(w, t), rel_label(r));
            }
            return std::nullopt;
        }

        void visit(std::deque<int> & queue, int from, int to, int label)
        {
            if (parent[to] != -1)
                return;
            parent[to] = from;
            parent_lab[to] = label;
            queue.push_back(to);
        }

        Path reconstruct(int end) const
        {
            // eps transitions keep the graph node; only labeled steps extend
            // the slice
            std::vector<std::pair<int, int>> steps; // (label, node after step)
            int cur = end;
            while (parent[cur] != cur) {
                if (parent_lab[cur] != 0)
                    steps.emplace_back(parent_lab[cur], cur / int(nfa.states.size()));
                cur = parent[cur];
            }
            std::reverse(steps.begin(), steps.end());
            Path p;
            p.nodes.push_back(Graph::root_node);
            for (auto [label, node] : steps) {
                p.labels.push_back(label);
                p.nodes.push_back(node);
            }
            return p;
        }
    };
}

bool has_slice_matching(const Graph & g, const Regex & e)
{
    if (g.is_empty())
        return false;
    Nfa nfa = thompson(e);
    ProductSearch search{g, nfa, {}, {}};
    return search.run().has_value();
}

std::optional<Path> find_slice_matching(const Graph & g, const Regex & e)
{
    if (g.is_empty())
        return std::nullopt;
    Nfa nfa = thompson(e);
    ProductSearch search{g, nfa, {}, {}};
    return search.run();
}

std::string render_path(const Graph & g, const Path & p)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        if (i > 0)
            out << " " << p.labels[i - 1] << " ";
        out << g.id(p.nodes[i]);
    }
    return out.str();
}

}
