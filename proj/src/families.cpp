#include "rgc/families.hpp"
#include "rgc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rgc {

Graph gen_grid(int rows, int cols)
{
    if (rows < 1 || cols < 1)
        throw PreconditionError("gen_grid: dimensions must be at least 1");

    auto cell = [&](int i, int j) -> std::string {
        if (i == 1 && j == 1)
            return "root";
        return "c" + std::to_string(i) + "_" + std::to_string(j);
    };

    GraphBuilder builder;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            if (! (i == 1 && j == 1))
                builder.declare_node(cell(i, j));
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
            builder.add_edge(Rel::s1, cell(i, j), j < cols ? cell(i, j + 1) : "null");
            builder.add_edge(Rel::s2, cell(i, j), i < rows ? cell(i + 1, j) : "null");
        }
    return std::move(builder).validate();
}

void CorresponderParams::validate() const
{
    if (n < 2 || k < 2)
        throw PreconditionError("corresponder params: need n >= 2 and k >= 2");
    if (int(u.size()) != k - 1 || int(l.size()) != k - 1)
        throw PreconditionError("corresponder params: expected k-1 split points");
    for (auto * seq : {&u, &l}) {
        int prev = 0; // implicit u_0 = l_0 = 0
        for (int x : *seq) {
            if (x <= prev)
                throw PreconditionError("corresponder params: split points must ascend from 0");
            prev = x;
        }
        if (prev >= n)
            throw PreconditionError("corresponder params: split points must stay below n");
    }
}

Graph gen_cg(const CorresponderParams & params)
{
    params.validate();
    int n = params.n, k = params.k;

    std::vector<bool> u_split(n, false), l_split(n, false);
    u_split[0] = l_split[0] = true;
    for (int x : params.u)
        u_split[x] = true;
    for (int x : params.l)
        l_split[x] = true;
    std::vector<int> u_all{0}, l_all{0};
    u_all.insert(u_all.end(), params.u.begin(), params.u.end());
    l_all.insert(l_all.end(), params.l.begin(), params.l.end());

    auto C = [](int i) { return "C" + std::to_string(i); };
    auto U = [](int i) { return "U" + std::to_string(i); };
    auto L = [](int i) { return "L" + std::to_string(i); };

    GraphBuilder b;
    for (int i = 0; i < 2 * k; ++i)
        b.declare_node(C(i));
    for (int i = 0; i < 2 * n; ++i) {
        b.declare_node(U(i));
        b.declare_node(L(i));
    }

    // three s1 spines
    b.add_edge(Rel::s1, "root", C(0));
    for (int i = 0; i + 1 < 2 * k; ++i)
        b.add_edge(Rel::s1, C(i), C(i + 1));
    b.add_edge(Rel::s1, C(2 * k - 1), "null");
    for (int i = 0; i + 1 < 2 * n; ++i) {
        b.add_edge(Rel::s1, U(i), U(i + 1));
        b.add_edge(Rel::s1, L(i), L(i + 1));
    }
    b.add_edge(Rel::s1, U(2 * n - 1), "null");
    b.add_edge(Rel::s1, L(2 * n - 1), "null");

    // s2: root guard, C-node anchors into the spines, the U/L ladder, and
    // the split-point back edges
    b.add_edge(Rel::s2, "root", "null");
    for (int i = 0; i < k; ++i) {
        b.add_edge(Rel::s2, C(2 * i), U(2 * u_all[i]));
        b.add_edge(Rel::s2, C(2 * i + 1), L(2 * l_all[i] + 1));
    }
    for (int i = 0; i < n; ++i) {
        b.add_edge(Rel::s2, U(2 * i), L(2 * i));
        b.add_edge(Rel::s2, L(2 * i + 1), U(2 * i + 1));
        b.add_edge(Rel::s2, U(2 * i + 1), l_split[i] ? "root" : "null");
        b.add_edge(Rel::s2, L(2 * i), u_split[i] ? "root" : "null");
    }
    return std::move(b).validate();
}

Graph gen_list(std::string_view w)
{
    for (char c : w)
        if (c != '1' && c != '2')
            throw PreconditionError("gen_list: word must be over {1,2}");
    GraphBuilder b;
    if (w.empty()) {
        b.add_edge(Rel::s1, "root", "null");
        b.add_edge(Rel::s2, "root", "null");
        return std::move(b).validate();
    }
    std::vector<std::string> chain{"root"};
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        chain.push_back("a" + std::to_string(i + 1));
        b.declare_node(chain.back());
    }
    chain.push_back("null");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        Rel step = rel_from_label(w[i] - '0');
        Rel other = step == Rel::s1 ? Rel::s2 : Rel::s1;
        b.add_edge(step, chain[i], chain[i + 1]);
        b.add_edge(other, chain[i], "null");
    }
    return std::move(b).validate();
}

namespace {

    std::vector<std::string> heap_ids(int m)
    {
        std::vector<std::string> ids{"null", "root"};
        for (int j = 1; j <= m; ++j)
            ids.push_back("h" + std::to_string(j));
        return ids;
    }

    // A deduped-scan assignment codes targets exactly like Graph indices:
    // 0 = null, 1 = root, 1 + j = plain node j. Slot 2*s + rel holds the
    // successor of scan node s (scan node 0 = root, s >= 1 = plain s).
    Graph heap_from_assignment(int m, const std::vector<int> & assign)
    {
        std::array<std::vector<std::vector<int>>, 2> adj;
        for (int r = 0; r < 2; ++r) {
            adj[r].resize(m + 2);
            adj[r][Graph::null_node] = {Graph::null_node};
            adj[r][Graph::root_node] = {assign[r]};
            for (int j = 1; j <= m; ++j)
                adj[r][1 + j] = {assign[2 * j + r]};
        }
        return make_graph_unchecked(heap_ids(m), std::move(adj));
    }

    // Relabels the plain nodes so the serialization is lexicographically
    // least. Ids h1 < ... < hm < null < root, so comparing edge lists under
    // the key (plain j -> label, null -> m+1, root -> m+2) mirrors comparing
    // the serialized text.
    Graph canonical_relabel(int m, const std::vector<int> & assign)
    {
        if (m <= 1)
            return heap_from_assignment(m, assign);

        auto key = [&](const std::vector<int> & label_of, int code) {
            if (code == Graph::null_node)
                return m + 1;
            if (code == Graph::root_node)
                return m + 2;
            return label_of[code - 2] + 1; // 1-based label
        };

        std::vector<int> perm(m); // perm[j] = label-1 assigned to plain j+1
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> best_perm;
        std::array<std::vector<std::pair<int, int>>, 2> best_lines, lines;

        do {
            for (int r = 0; r < 2; ++r) {
                lines[r].clear();
                lines[r].emplace_back(m + 2, key(perm, assign[r])); // root line
                for (int j = 1; j <= m; ++j)
                    lines[r].emplace_back(perm[j - 1] + 1, key(perm, assign[2 * j + r]));
                std::sort(lines[r].begin(), lines[r].end());
            }
            if (best_perm.empty() || lines < best_lines) {
                best_lines = lines;
                best_perm = perm;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        // rebuild the assignment under the winning labeling
        std::vector<int> relabeled(assign.size());
        auto map_code = [&](int code) {
            if (code < Graph::first_plain)
                return code;
            return best_perm[code - 2] + 2;
        };
        for (int j = 0; j <= m; ++j)
            for (int r = 0; r < 2; ++r) {
                int slot = 2 * j + r;
                int target_slot = j == 0 ? r : 2 * (best_perm[j - 1] + 1) + r;
                relabeled[target_slot] = map_code(assign[slot]);
            }
        return heap_from_assignment(m, relabeled);
    }

    // Canonical scan: discovery-ordered successor assignment. Every complete
    // assignment is a heap with exactly m plain nodes, and every isomorphism
    // class shows up exactly once.
    bool scan_canonical(int m, std::vector<int> & assign, int slot, int used,
        const std::function<bool(const Graph &)> & f)
    {
        int total_slots = 2 * (m + 1);
        if (slot == total_slots) {
            if (used != m)
                return true;
            return f(canonical_relabel(m, assign));
        }
        int node = slot / 2;
        if (node > used)
            return true; // node never got discovered; dead branch
        if (m - used > total_slots - slot)
            return true; // not enough slots left to discover the rest
        int limit = std::min(used + 2, m + 1);
        for (int code = 0; code <= limit; ++code) {
            assign[slot] = code;
            int next_used = code == used + 2 ? used + 1 : used;
            if (! scan_canonical(m, assign, slot + 1, next_used, f))
                return false;
        }
        return true;
    }

    // Labeled scan: all successor assignments over ids h1..hm, filtered to
    // heaps (every plain node reachable).
    bool scan_labeled(int m, const std::function<bool(const Graph &)> & f)
    {
        int slots = 2 * (m + 1);
        std::vector<int> assign(slots, 0);
        while (true) {
            bool reachable = true;
            if (m > 0) {
                std::vector<bool> seen(m + 2, false);
                seen[Graph::root_node] = true;
                std::vector<int> stack{Graph::root_node};
                while (! stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (int r = 0; r < 2; ++r) {
                        int w = v == Graph::root_node ? assign[r] : assign[2 * (v - 1) + r];
                        if (! seen[w]) {
                            seen[w] = true;
                            if (w >= Graph::first_plain)
                                stack.push_back(w);
                        }
                    }
                }
                for (int j = 1; j <= m; ++j)
                    if (! seen[1 + j])
                        reachable = false;
            }
            if (reachable && ! f(heap_from_assignment(m, assign)))
                return false;

            int pos = slots - 1;
            while (pos >= 0 && assign[pos] == m + 1)
                assign[pos--] = 0;
            if (pos < 0)
                return true;
            ++assign[pos];
        }
    }

}

namespace detail {

    std::vector<HeapScanPart> heap_scan_parts(int m)
    {
        std::vector<HeapScanPart> parts;
        // mirrors the first two levels of scan_canonical
        int limit0 = std::min(2, m + 1);
        for (int c0 = 0; c0 <= limit0; ++c0) {
            int used0 = c0 == 2 ? 1 : 0;
            int limit1 = std::min(used0 + 2, m + 1);
            for (int c1 = 0; c1 <= limit1; ++c1)
                parts.push_back({m, c0, c1});
        }
        return parts;
    }

    bool scan_heap_part(const HeapScanPart & part, const std::function<bool(const Graph &)> & f)
    {
        int m = part.m;
        std::vector<int> assign(2 * (m + 1), 0);
        assign[0] = part.root_s1;
        assign[1] = part.root_s2;
        int used = std::max(part.root_s1, part.root_s2) - 1;
        if (used < 0)
            used = 0;
        return scan_canonical(m, assign, 2, used, f);
    }

}

bool for_each_heap(const HeapEnumConfig & cfg, const std::function<bool(const Graph &)> & f)
{
    if (cfg.max_nodes < 0)
        throw PreconditionError("enumerate_heaps: negative node budget");
    if (cfg.max_nodes > 9)
        throw PreconditionError("enumerate_heaps: supports at most 9 plain nodes");
    for (int m = 0; m <= cfg.max_nodes; ++m) {
        if (cfg.dedupe) {
            std::vector<int> assign(2 * (m + 1), 0);
            if (! scan_canonical(m, assign, 0, 0, f))
                return false;
        }
        else if (! scan_labeled(m, f))
            return false;
    }
    return true;
}

std::vector<Graph> collect_heaps(const HeapEnumConfig & cfg, std::size_t limit)
{
    std::vector<Graph> heaps;
    for_each_heap(cfg, [&](const Graph & h) {
        heaps.push_back(h);
        return heaps.size() < limit;
    });
    return heaps;
}

}
