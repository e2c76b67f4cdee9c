#include "rgc/pcp.hpp"
#include "rgc/errors.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rgc {

namespace {

    std::vector<std::uint32_t> decode_utf8(const std::string & s)
    {
        std::vector<std::uint32_t> out;
        std::size_t i = 0;
        while (i < s.size()) {
            unsigned char c = s[i];
            int extra;
            std::uint32_t cp;
            if (c < 0x80) {
                cp = c;
                extra = 0;
            }
            else if ((c >> 5) == 0x6) {
                cp = c & 0x1f;
                extra = 1;
            }
            else if ((c >> 4) == 0xe) {
                cp = c & 0x0f;
                extra = 2;
            }
            else if ((c >> 3) == 0x1e) {
                cp = c & 0x07;
                extra = 3;
            }
            else
                throw PreconditionError("invalid UTF-8 in word: " + s);
            if (i + extra >= s.size())
                throw PreconditionError("invalid UTF-8 in word: " + s);
            for (int k = 1; k <= extra; ++k) {
                unsigned char cc = s[i + k];
                if ((cc >> 6) != 0x2)
                    throw PreconditionError("invalid UTF-8 in word: " + s);
                cp = (cp << 6) | (cc & 0x3f);
            }
            out.push_back(cp);
            i += extra + 1;
        }
        return out;
    }

}

PcpInstance PcpInstance::from_pairs(std::vector<std::pair<std::string, std::string>> pairs)
{
    if (pairs.empty())
        throw PreconditionError("pcp instance: no pairs");
    if (pairs.size() == 1)
        pairs.push_back(pairs.front()); // reduction assumes at least two pairs
    PcpInstance inst;
    inst.pairs = std::move(pairs);
    for (auto & [v, w] : inst.pairs) {
        inst.top_.push_back(decode_utf8(v));
        inst.bottom_.push_back(decode_utf8(w));
        if (inst.top_.back().empty() || inst.bottom_.back().empty())
            throw PreconditionError("pcp instance: words must be nonempty");
    }
    return inst;
}

PcpInstance PcpInstance::parse(std::string_view text)
{
    std::vector<std::pair<std::string, std::string>> pairs;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (! (ls >> tok) || tok[0] == '#')
            continue;
        if (tok != "pair")
            throw ParseError("expected: pair <v> <w>", line_no);
        std::string v, w;
        if (! (ls >> v >> w))
            throw ParseError("expected: pair <v> <w>", line_no);
        pairs.emplace_back(v, w);
    }
    try {
        return from_pairs(std::move(pairs));
    }
    catch (const PreconditionError & e) {
        throw ParseError(e.what(), line_no);
    }
}

PcpInstance PcpInstance::load(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open pcp file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

bool check_solution(const PcpInstance & inst, const PcpSolution & sol)
{
    if (sol.indices.empty())
        return false;
    std::vector<std::uint32_t> top, bottom;
    for (int t : sol.indices) {
        if (t < 0 || t >= inst.size())
            return false;
        top.insert(top.end(), inst.top(t).begin(), inst.top(t).end());
        bottom.insert(bottom.end(), inst.bottom(t).begin(), inst.bottom(t).end());
    }
    return top == bottom;
}

std::optional<PcpSolution> brute_solve_pcp(const PcpInstance & inst, int max_len)
{
    if (max_len < 1)
        throw PreconditionError("brute_solve_pcp: max_len must be at least 1");

    struct State {
        std::vector<int> indices;
        std::vector<std::uint32_t> top, bottom;
    };

    auto compatible = [](const State & s) {
        std::size_t n = std::min(s.top.size(), s.bottom.size());
        return std::equal(s.top.begin(), s.top.begin() + n, s.bottom.begin());
    };

    std::deque<State> queue{State{}};
    while (! queue.empty()) {
        State cur = std::move(queue.front());
        queue.pop_front();
        if (! cur.indices.empty() && cur.top.size() == cur.bottom.size())
            return PcpSolution{cur.indices};
        if (int(cur.indices.size()) == max_len)
            continue;
        for (int t = 0; t < inst.size(); ++t) {
            State next = cur;
            next.indices.push_back(t);
            next.top.insert(next.top.end(), inst.top(t).begin(), inst.top(t).end());
            next.bottom.insert(next.bottom.end(), inst.bottom(t).begin(), inst.bottom(t).end());
            // a mismatch in the shared prefix can never be repaired
            if (compatible(next))
                queue.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

namespace {

    std::string c_node(int i) { return "c" + std::to_string(i); }

    std::string a_node(int i, int j, int alpha)
    {
        return "a" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(alpha);
    }

    std::string b_node(int i, int j, int alpha)
    {
        return "b" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(alpha);
    }

}

Graph build_reduction(const PcpInstance & inst)
{
    int m = inst.size();
    auto p = [&](int i) { return int(inst.top(i).size()); };
    auto q = [&](int i) { return int(inst.bottom(i).size()); };
    auto top_letter = [&](int i, int j) { return inst.top(i)[j]; };
    auto bottom_letter = [&](int i, int j) { return inst.bottom(i)[j]; };

    GraphBuilder b;
    for (int i = 0; i < 2 * m; ++i)
        b.declare_node(c_node(i));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < 2 * p(i); ++j)
            b.declare_node(a_node(i, j, 0));
        for (int j = 0; j < 2 * q(i); ++j)
            b.declare_node(b_node(i, j, 0));
        for (int j = 0; j < q(i); ++j)
            b.declare_node(b_node(i, 2 * j, 1));
        for (int j = 0; j < p(i); ++j)
            b.declare_node(a_node(i, 2 * j + 1, 1));
    }

    // s1: the c-list skeleton; every even/odd c-pair can repeat in any order
    for (int i = 0; i < m; ++i) {
        b.add_edge(Rel::s1, "root", c_node(2 * i));
        b.add_edge(Rel::s1, c_node(2 * i), c_node(2 * i + 1));
        for (int j = 0; j < m; ++j)
            b.add_edge(Rel::s1, c_node(2 * i + 1), c_node(2 * j));
        b.add_edge(Rel::s1, c_node(2 * i + 1), "null");
    }

    // s1: word-position chains; the last position may continue into any
    // word's first position or drop to null
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < p(i); ++j)
            for (int alpha : {0, 1})
                b.add_edge(Rel::s1, a_node(i, 2 * j, 0), a_node(i, 2 * j + 1, alpha));
        for (int j = 0; j + 1 < p(i); ++j)
            for (int alpha : {0, 1})
                b.add_edge(Rel::s1, a_node(i, 2 * j + 1, alpha), a_node(i, 2 * j + 2, 0));
        for (int alpha : {0, 1}) {
            for (int j = 0; j < m; ++j)
                b.add_edge(Rel::s1, a_node(i, 2 * p(i) - 1, alpha), a_node(j, 0, 0));
            b.add_edge(Rel::s1, a_node(i, 2 * p(i) - 1, alpha), "null");
        }

        for (int j = 0; j < q(i); ++j)
            for (int alpha : {0, 1})
                b.add_edge(Rel::s1, b_node(i, 2 * j, alpha), b_node(i, 2 * j + 1, 0));
        for (int j = 0; j + 1 < q(i); ++j)
            for (int alpha : {0, 1})
                b.add_edge(Rel::s1, b_node(i, 2 * j + 1, 0), b_node(i, 2 * j + 2, alpha));
        for (int j = 0; j < m; ++j)
            for (int alpha : {0, 1})
                b.add_edge(Rel::s1, b_node(i, 2 * q(i) - 1, 0), b_node(j, 0, alpha));
        b.add_edge(Rel::s1, b_node(i, 2 * q(i) - 1, 0), "null");
    }

    // s2: anchors from c-nodes to word starts
    b.add_edge(Rel::s2, "root", "null");
    for (int i = 0; i < m; ++i) {
        b.add_edge(Rel::s2, c_node(2 * i), a_node(i, 0, 0));
        b.add_edge(Rel::s2, c_node(2 * i + 1), b_node(i, 1, 0));
    }

    // s2: letter-match edges between the two word families. Word-initial
    // positions pair with the marked (alpha = 1) variants, which in turn
    // point back at root; everything else drops to null.
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            for (int l = 0; l < q(k); ++l)
                if (top_letter(i, 0) == bottom_letter(k, l))
                    b.add_edge(Rel::s2, a_node(i, 0, 0), b_node(k, 2 * l, 1));
            for (int j = 1; j < p(i); ++j)
                for (int l = 0; l < q(k); ++l)
                    if (top_letter(i, j) == bottom_letter(k, l))
                        b.add_edge(Rel::s2, a_node(i, 2 * j, 0), b_node(k, 2 * l, 0));
            for (int j = 0; j < p(i); ++j)
                if (top_letter(i, j) == bottom_letter(k, 0))
                    b.add_edge(Rel::s2, b_node(k, 1, 0), a_node(i, 2 * j + 1, 1));
            for (int j = 0; j < p(i); ++j)
                for (int l = 1; l < q(k); ++l)
                    if (top_letter(i, j) == bottom_letter(k, l))
                        b.add_edge(Rel::s2, b_node(k, 2 * l + 1, 0), a_node(i, 2 * j + 1, 0));
        }
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < q(k); ++l) {
            b.add_edge(Rel::s2, b_node(k, 2 * l, 0), "null");
            b.add_edge(Rel::s2, b_node(k, 2 * l, 1), "root");
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < p(i); ++j) {
            b.add_edge(Rel::s2, a_node(i, 2 * j + 1, 0), "null");
            b.add_edge(Rel::s2, a_node(i, 2 * j + 1, 1), "root");
        }

    return std::move(b).validate();
}

CgWitness witness_from_solution(const PcpInstance & inst, const PcpSolution & sol)
{
    if (! check_solution(inst, sol))
        throw PreconditionError("witness_from_solution: not a solution of the instance");

    std::vector<int> t = sol.indices;
    if (t.size() == 1)
        t.push_back(t.front()); // CG needs k >= 2; a doubled solution is a solution

    int k = int(t.size());
    std::vector<int> u_all{0}, l_all{0};
    for (int j = 0; j + 1 < k; ++j) {
        u_all.push_back(u_all.back() + int(inst.top(t[j]).size()));
        l_all.push_back(l_all.back() + int(inst.bottom(t[j]).size()));
    }
    int n = u_all.back() + int(inst.top(t[k - 1]).size());

    CorresponderParams params;
    params.n = n;
    params.k = k;
    params.u.assign(u_all.begin() + 1, u_all.end());
    params.l.assign(l_all.begin() + 1, l_all.end());

    Graph cg = gen_cg(params);
    Graph reduction = build_reduction(inst);

    auto block_of = [](const std::vector<int> & splits, int f) {
        int j = 0;
        while (j + 1 < int(splits.size()) && splits[j + 1] <= f)
            ++j;
        return j;
    };
    auto in_splits = [](const std::vector<int> & splits, int f) {
        return std::find(splits.begin(), splits.end(), f) != splits.end();
    };

    Homomorphism h;
    h.mapping.assign(cg.node_count(), -1);
    auto send = [&](const std::string & from, const std::string & to) {
        h.mapping[*cg.find(from)] = *reduction.find(to);
    };

    h.mapping[Graph::null_node] = Graph::null_node;
    h.mapping[Graph::root_node] = Graph::root_node;
    for (int j = 0; j < k; ++j) {
        send("C" + std::to_string(2 * j), c_node(2 * t[j]));
        send("C" + std::to_string(2 * j + 1), c_node(2 * t[j] + 1));
    }
    for (int f = 0; f < n; ++f) {
        int ju = block_of(u_all, f);
        int pos_u = f - u_all[ju];
        send("U" + std::to_string(2 * f), a_node(t[ju], 2 * pos_u, 0));
        send("U" + std::to_string(2 * f + 1),
            a_node(t[ju], 2 * pos_u + 1, in_splits(l_all, f) ? 1 : 0));

        int jl = block_of(l_all, f);
        int pos_l = f - l_all[jl];
        send("L" + std::to_string(2 * f), b_node(t[jl], 2 * pos_l, in_splits(u_all, f) ? 1 : 0));
        send("L" + std::to_string(2 * f + 1), b_node(t[jl], 2 * pos_l + 1, 0));
    }

    if (! check_hom(cg, reduction, h))
        throw std::logic_error("witness_from_solution: constructed map is not a homomorphism");
    return {std::move(params), std::move(cg), std::move(h)};
}

PcpSolution solution_from_witness(const PcpInstance & inst, const Graph & cg,
    const Homomorphism & hom)
{
    Graph reduction = build_reduction(inst);
    if (! check_hom(cg, reduction, hom))
        throw PreconditionError("solution_from_witness: not a homomorphism into the reduction");

    PcpSolution sol;
    for (int j = 0;; ++j) {
        auto c2j = cg.find("C" + std::to_string(2 * j));
        if (! c2j)
            break;
        const std::string & image = reduction.id(hom.mapping[*c2j]);
        if (image.size() < 2 || image[0] != 'c')
            throw PreconditionError("solution_from_witness: C-node image is not a c-node");
        int index = std::stoi(image.substr(1));
        if (index % 2 != 0)
            throw PreconditionError("solution_from_witness: C-node image is not an even c-node");
        sol.indices.push_back(index / 2);
    }
    if (! check_solution(inst, sol))
        throw PreconditionError("solution_from_witness: extracted indices are not a solution");
    return sol;
}

std::vector<CorresponderParams> cg_param_space(int n_max, int k_max)
{
    std::vector<CorresponderParams> space;
    for (int n = 2; n <= n_max; ++n)
        for (int k = 2; k <= std::min(k_max, n); ++k) {
            // (k-1)-subsets of {1..n-1}, lexicographic
            std::vector<std::vector<int>> combos;
            std::vector<int> combo(k - 1);
            auto rec = [&](auto && self, int depth, int low) -> void {
                if (depth == k - 1) {
                    combos.push_back(combo);
                    return;
                }
                for (int x = low; x <= n - 1 - (k - 2 - depth); ++x) {
                    combo[depth] = x;
                    self(self, depth + 1, x + 1);
                }
            };
            rec(rec, 0, 1);
            for (auto & u : combos)
                for (auto & l : combos) {
                    CorresponderParams params;
                    params.n = n;
                    params.k = k;
                    params.u = u;
                    params.l = l;
                    space.push_back(std::move(params));
                }
        }
    return space;
}

std::optional<CgWitness> bounded_cg_search(const PcpInstance & inst, int n_max, int k_max)
{
    if (n_max < 2 || k_max < 2)
        throw PreconditionError("bounded_cg_search: bounds must be at least 2");
    Graph reduction = build_reduction(inst);
    for (auto & params : cg_param_space(n_max, k_max)) {
        Graph cg = gen_cg(params);
        if (auto h = find_hom(cg, reduction))
            return CgWitness{params, std::move(cg), std::move(*h)};
    }
    return std::nullopt;
}

}
