#include "rgc/hom.hpp"
#include "rgc/bitset.hpp"
#include "rgc/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rgc {

bool check_hom(const Graph & source, const Graph & target, const Homomorphism & h)
{
    if (source.is_empty() || target.is_empty())
        throw std::invalid_argument("check_hom: empty graph");
    if (int(h.mapping.size()) != source.node_count())
        throw std::invalid_argument("check_hom: map size does not match source");
    if (! h.total())
        throw std::invalid_argument("check_hom: map is not total");
    for (int v : h.mapping)
        if (v < 0 || v >= target.node_count())
            throw std::invalid_argument("check_hom: map value out of range");

    for (int v = 0; v < source.node_count(); ++v) {
        bool v_root = v == Graph::root_node, v_null = v == Graph::null_node;
        if ((h.mapping[v] == Graph::root_node) != v_root)
            return false;
        if ((h.mapping[v] == Graph::null_node) != v_null)
            return false;
    }
    for (auto r : all_rels)
        for (int v = 0; v < source.node_count(); ++v)
            for (int w : source.successors(r, v))
                if (! target.has_edge(r, h.mapping[v], h.mapping[w]))
                    return false;
    return true;
}

namespace {

// Backtracking assignment of plain source nodes to plain target nodes with
// forward checking. Variables run in index order (= lexicographic id order),
// values likewise, so solutions come out in canonical lexicographic order.
class HomSearch {
public:
    HomSearch(const Graph & source, const Graph & target) :
        src_(source),
        tgt_(target)
    {
        int tn = tgt_.node_count();
        for (int r = 0; r < 2; ++r) {
            succ_mask_[r].assign(tn, Bitset(tn));
            pred_mask_[r].assign(tn, Bitset(tn));
            for (int v = 0; v < tn; ++v)
                for (int w : tgt_.successors(static_cast<Rel>(r), v)) {
                    succ_mask_[r][v].set(w);
                    pred_mask_[r][w].set(v);
                }
        }
    }

    // Restricts the first plain source node to one value (search-space
    // partitioning). Must be called before run().
    void fix_first(int value) { fixed_first_ = value; }

    // Runs the search; emit is called with each complete map in canonical
    // order and returns false to stop early.
    void run(const std::function<bool(const Homomorphism &)> & emit)
    {
        int sn = src_.node_count();

        // Edges between the two forced nodes must hold in the target outright.
        for (auto r : all_rels)
            for (int v : {Graph::null_node, Graph::root_node})
                for (int w : src_.successors(r, v))
                    if (w < Graph::first_plain && ! tgt_.has_edge(r, v, w))
                        return;

        Bitset plain_targets(tgt_.node_count());
        for (int t = Graph::first_plain; t < tgt_.node_count(); ++t)
            plain_targets.set(t);

        cand_.assign(sn, plain_targets);
        for (int v = Graph::first_plain; v < sn; ++v) {
            for (auto r : all_rels) {
                int ri = static_cast<int>(r);
                for (int w : src_.successors(r, v))
                    if (w < Graph::first_plain)
                        cand_[v] &= pred_mask_[ri][w];
                for (int w : src_.predecessors(r, v))
                    if (w < Graph::first_plain)
                        cand_[v] &= succ_mask_[ri][w];
                if (src_.has_edge(r, v, v)) {
                    Bitset loops(tgt_.node_count());
                    for (int t = 0; t < tgt_.node_count(); ++t)
                        if (tgt_.has_edge(r, t, t))
                            loops.set(t);
                    cand_[v] &= loops;
                }
            }
            if (cand_[v].none())
                return;
        }

        if (fixed_first_ >= 0 && sn > Graph::first_plain) {
            if (! cand_[Graph::first_plain].test(fixed_first_))
                return;
            Bitset only(tgt_.node_count());
            only.set(fixed_first_);
            cand_[Graph::first_plain] &= only;
        }

        assignment_.assign(sn, -1);
        assignment_[Graph::null_node] = Graph::null_node;
        assignment_[Graph::root_node] = Graph::root_node;
        stopped_ = false;
        emit_ = &emit;
        extend(Graph::first_plain);
    }

private:
    bool extend(int v)
    {
        if (stopped_)
            return false;
        if (v == src_.node_count()) {
            if (! (*emit_)(Homomorphism{assignment_}))
                stopped_ = true;
            return ! stopped_;
        }
        for (int value = cand_[v].next(); value != -1; value = cand_[v].next(value + 1)) {
            assignment_[v] = value;
            std::vector<std::pair<int, Bitset>> trail;
            if (propagate(v, value, trail)) {
                if (! extend(v + 1)) {
                    assignment_[v] = -1;
                    return false;
                }
            }
            for (auto it = trail.rbegin(); it != trail.rend(); ++it)
                cand_[it->first] = std::move(it->second);
            assignment_[v] = -1;
        }
        return true;
    }

    bool propagate(int v, int value, std::vector<std::pair<int, Bitset>> & trail)
    {
        for (auto r : all_rels) {
            int ri = static_cast<int>(r);
            for (int w : src_.successors(r, v)) {
                if (w < Graph::first_plain) {
                    if (! tgt_.has_edge(r, value, w))
                        return false;
                    continue;
                }
                if (assignment_[w] >= 0) {
                    if (! tgt_.has_edge(r, value, assignment_[w]))
                        return false;
                }
                else if (! narrow(w, succ_mask_[ri][value], trail))
                    return false;
            }
            for (int w : src_.predecessors(r, v)) {
                if (w < Graph::first_plain) {
                    if (! tgt_.has_edge(r, w, value))
                        return false;
                    continue;
                }
                if (assignment_[w] >= 0) {
                    if (! tgt_.has_edge(r, assignment_[w], value))
                        return false;
                }
                else if (! narrow(w, pred_mask_[ri][value], trail))
                    return false;
            }
        }
        return true;
    }

    bool narrow(int node, const Bitset & mask, std::vector<std::pair<int, Bitset>> & trail)
    {
        trail.emplace_back(node, cand_[node]);
        cand_[node] &= mask;
        return cand_[node].any();
    }

    const Graph & src_;
    const Graph & tgt_;
    std::array<std::vector<Bitset>, 2> succ_mask_, pred_mask_;
    std::vector<Bitset> cand_;
    std::vector<int> assignment_;
    const std::function<bool(const Homomorphism &)> * emit_ = nullptr;
    bool stopped_ = false;
    int fixed_first_ = -1;
};

}

namespace detail {

    std::vector<Homomorphism> enumerate_homs_first_fixed(const Graph & source,
        const Graph & target, int first_value, std::size_t limit)
    {
        std::vector<Homomorphism> result;
        if (target.is_empty() || limit == 0)
            return result;
        HomSearch search(source, target);
        search.fix_first(first_value);
        search.run([&](const Homomorphism & h) {
            result.push_back(h);
            return result.size() < limit;
        });
        return result;
    }

}

std::optional<Homomorphism> find_hom(const Graph & source, const Graph & target)
{
    if (source.is_empty())
        throw std::invalid_argument("find_hom: empty source");
    if (target.is_empty())
        return std::nullopt;
    std::optional<Homomorphism> result;
    HomSearch search(source, target);
    search.run([&](const Homomorphism & h) {
        result = h;
        return false;
    });
    return result;
}

std::vector<Homomorphism> enumerate_homs(const Graph & source, const Graph & target,
    std::size_t limit)
{
    if (source.is_empty())
        throw std::invalid_argument("enumerate_homs: empty source");
    std::vector<Homomorphism> result;
    if (target.is_empty() || limit == 0)
        return result;
    HomSearch search(source, target);
    search.run([&](const Homomorphism & h) {
        result.push_back(h);
        return result.size() < limit;
    });
    return result;
}

Homomorphism compose(const Graph & source, const Graph & mid, const Graph & target,
    const Homomorphism & h1, const Homomorphism & h2)
{
    if (int(h1.mapping.size()) != source.node_count())
        throw std::invalid_argument("compose: h1 domain mismatch");
    if (int(h2.mapping.size()) != mid.node_count())
        throw std::invalid_argument("compose: h2 domain mismatch");
    for (int v : h2.mapping)
        if (v < 0 || v >= target.node_count())
            throw std::invalid_argument("compose: h2 value outside the target");
    Homomorphism out;
    out.mapping.resize(h1.mapping.size());
    for (std::size_t v = 0; v < h1.mapping.size(); ++v) {
        int m = h1.mapping[v];
        if (m < 0 || m >= int(h2.mapping.size()))
            throw std::invalid_argument("compose: h1 value outside h2 domain");
        out.mapping[v] = h2.mapping[m];
    }
    return out;
}

Homomorphism identity_hom(const Graph & g)
{
    Homomorphism h;
    h.mapping.resize(g.node_count());
    for (int v = 0; v < g.node_count(); ++v)
        h.mapping[v] = v;
    return h;
}

std::string render_hom(const Graph & source, const Graph & target, const Homomorphism & h)
{
    std::vector<std::pair<std::string, std::string>> lines;
    for (int v = 0; v < source.node_count(); ++v)
        lines.emplace_back(source.id(v), target.id(h.mapping[v]));
    std::sort(lines.begin(), lines.end());
    std::ostringstream out;
    for (auto & [from, to] : lines)
        out << from << " -> " << to << "\n";
    return out.str();
}

}
