#ifndef RGC_GRAPH_HPP
#define RGC_GRAPH_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace rgc {

// The two edge relations. Values double as array indices; rel_label turns
// them into the path-alphabet letters 1 and 2.
enum class Rel : int { s1 = 0, s2 = 1 };

constexpr std::array<Rel, 2> all_rels{Rel::s1, Rel::s2};
constexpr int rel_label(Rel r) { return static_cast<int>(r) + 1; }
constexpr Rel rel_from_label(int l) { return static_cast<Rel>(l - 1); }

// A finite two-relation structure with distinguished root and null nodes.
// null carries an implicit self-loop in each relation (its only outgoing
// edges); these are materialized internally but never serialized.
//
// Nodes are dense indices: 0 = null, 1 = root, then the remaining nodes in
// lexicographic id order. That normalization is what makes every search and
// serialization in the library deterministic.
//
// Immutable after construction; safe to share across threads.
class Graph {
public:
    static constexpr int null_node = 0;
    static constexpr int root_node = 1;
    static constexpr int first_plain = 2;

    // The empty graph: produced only by graph cleanup, exempt from the
    // structural invariants.
    static Graph empty_graph();

    bool is_empty() const { return ids_.empty(); }
    int node_count() const { return int(ids_.size()); }
    int plain_count() const { return is_empty() ? 0 : node_count() - 2; }

    const std::string & id(int v) const { return ids_[v]; }
    std::optional<int> find(std::string_view id) const;

    std::span<const int> successors(Rel r, int v) const
    {
        return adj_[static_cast<int>(r)][v];
    }

    std::span<const int> predecessors(Rel r, int v) const
    {
        return radj_[static_cast<int>(r)][v];
    }

    bool has_edge(Rel r, int from, int to) const;

    // Edges of one relation as (from, to) pairs, ascending, including the
    // null self-loop.
    std::vector<std::pair<int, int>> edges(Rel r) const;

    int edge_count(Rel r) const;

    bool operator==(const Graph &) const = default;

private:
    friend class GraphBuilder;
    friend Graph make_graph_unchecked(std::vector<std::string>,
        std::array<std::vector<std::vector<int>>, 2>);
    Graph() = default;

    std::vector<std::string> ids_;
    std::array<std::vector<std::vector<int>>, 2> adj_;
    std::array<std::vector<std::vector<int>>, 2> radj_;
};

// Trusted constructor for generators that already produce normalized data:
// ids[0] = "null", ids[1] = "root", plain ids sorted, adjacency lists sorted
// and deduplicated, null self-loops present. Reverse adjacency is derived.
Graph make_graph_unchecked(std::vector<std::string> ids,
    std::array<std::vector<std::vector<int>>, 2> adj);

// Accumulates a candidate structure, then validate() checks the Definition-1
// invariants and produces a normalized Graph. root and null exist implicitly;
// the null self-loops are inserted if absent.
class GraphBuilder {
public:
    GraphBuilder();

    // Declares a node. Throws InvalidGraphError on duplicate declaration
    // (including the reserved names).
    void declare_node(std::string_view id);

    // Adds an edge between declared nodes (auto_declare relaxes that for
    // formats where edges introduce nodes).
    void add_edge(Rel r, std::string_view from, std::string_view to, bool auto_declare = false);

    bool has_node(std::string_view id) const;

    Graph validate() &&;

private:
    std::vector<std::string> plain_ids_;
    std::vector<std::tuple<int, std::string, std::string>> edges_;
};

struct Classification {
    bool is_heap = false;
    bool is_tree = false;
    bool is_list = false;
    bool is_orable = false;
};

Classification classify(const Graph & g);

// Number of distinct nodes with an edge into x (either relation). A node
// with both an s1 and an s2 edge into x counts once. With
// exclude_null_self_loops set and x = null, null's own loops are ignored.
int in_degree(const Graph & g, int x, bool exclude_null_self_loops = false);

// Directed reachability from root along both relations. Empty for the empty
// graph or when root is absent.
std::vector<bool> reachable_from_root(const Graph & g);

// Text format: `node <id>` declarations, `s1 <from> <to>`, `s2 <from> <to>`,
// `#` comments. root and null are implicit and reserved. serialize() is
// canonical: plain nodes sorted, then s1 edges, then s2 edges, endpoint
// sorted; null's self-loops are omitted.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string & path);
std::string serialize(const Graph & g);
void save_graph(const Graph & g, const std::string & path);

}

#endif
