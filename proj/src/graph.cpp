#include "rgc/graph.hpp"
#include "rgc/errors.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

namespace rgc {

namespace {
    const std::string root_id = "root";
    const std::string null_id = "null";
}

Graph Graph::empty_graph()
{
    return Graph{};
}

std::optional<int> Graph::find(std::string_view id) const
{
    for (int v = 0; v < node_count(); ++v)
        if (ids_[v] == id)
            return v;
    return std::nullopt;
}

bool Graph::has_edge(Rel r, int from, int to) const
{
    auto s = successors(r, from);
    return std::binary_search(s.begin(), s.end(), to);
}

std::vector<std::pair<int, int>> Graph::edges(Rel r) const
{
    std::vector<std::pair<int, int>> result;
    for (int v = 0; v < node_count(); ++v)
        for (int w : successors(r, v))
            result.emplace_back(v, w);
    std::sort(result.begin(), result.end());
    return result;
}

int Graph::edge_count(Rel r) const
{
    int n = 0;
    for (int v = 0; v < node_count(); ++v)
        n += int(successors(r, v).size());
    return n;
}

GraphBuilder::GraphBuilder() = default;

namespace {
    void check_id(std::string_view id)
    {
        if (id.empty() || id[0] == '#' ||
            id.find_first_of(" \t\r\n") != std::string_view::npos)
            throw InvalidGraphError("bad node id: '" + std::string(id) + "'");
    }
}

void GraphBuilder::declare_node(std::string_view id)
{
    check_id(id);
    if (has_node(id))
        throw InvalidGraphError("duplicate node declaration: " + std::string(id));
    plain_ids_.emplace_back(id);
}

bool GraphBuilder::has_node(std::string_view id) const
{
    if (id == root_id || id == null_id)
        return true;
    return std::find(plain_ids_.begin(), plain_ids_.end(), id) != plain_ids_.end();
}

void GraphBuilder::add_edge(Rel r, std::string_view from, std::string_view to, bool auto_declare)
{
    if (from == null_id && to != null_id)
        throw InvalidGraphError("null may only self-loop: null -> " + std::string(to));
    for (auto endpoint : {from, to}) {
        if (! has_node(endpoint)) {
            if (auto_declare) {
                check_id(endpoint);
                plain_ids_.emplace_back(endpoint);
            }
            else
                throw InvalidGraphError("edge endpoint not in node set: " + std::string(endpoint));
        }
    }
    edges_.emplace_back(static_cast<int>(r), std::string(from), std::string(to));
}

Graph GraphBuilder::validate() &&
{
    Graph g;
    std::sort(plain_ids_.begin(), plain_ids_.end());
    g.ids_.reserve(plain_ids_.size() + 2);
    g.ids_.push_back(null_id);
    g.ids_.push_back(root_id);
    for (auto & id : plain_ids_)
        g.ids_.push_back(std::move(id));

    auto index_of = [&](const std::string & id) {
        return int(std::find(g.ids_.begin(), g.ids_.end(), id) - g.ids_.begin());
    };

    int n = g.node_count();
    std::array<std::vector<std::set<int>>, 2> adj;
    for (auto & a : adj)
        a.resize(n);

    for (auto & [r, from, to] : edges_) {
        adj[r][index_of(from)].insert(index_of(to));
    }

    // the ambient null self-loops
    adj[0][Graph::null_node].insert(Graph::null_node);
    adj[1][Graph::null_node].insert(Graph::null_node);

    for (int r = 0; r < 2; ++r) {
        g.adj_[r].resize(n);
        g.radj_[r].resize(n);
        for (int v = 0; v < n; ++v)
            g.adj_[r][v].assign(adj[r][v].begin(), adj[r][v].end());
        for (int v = 0; v < n; ++v)
            for (int w : g.adj_[r][v])
                g.radj_[r][w].push_back(v);
        for (int v = 0; v < n; ++v)
            std::sort(g.radj_[r][v].begin(), g.radj_[r][v].end());
    }
    return g;
}

Graph make_graph_unchecked(std::vector<std::string> ids,
    std::array<std::vector<std::vector<int>>, 2> adj)
{
    Graph g;
    g.ids_ = std::move(ids);
    g.adj_ = std::move(adj);
    int n = g.node_count();
    for (int r = 0; r < 2; ++r) {
        g.radj_[r].assign(n, {});
        for (int v = 0; v < n; ++v)
            for (int w : g.adj_[r][v])
                g.radj_[r][w].push_back(v);
        for (int v = 0; v < n; ++v)
            std::sort(g.radj_[r][v].begin(), g.radj_[r][v].end());
    }
    return g;
}

std::vector<bool> reachable_from_root(const Graph & g)
{
    std::vector<bool> seen(g.node_count(), false);
    if (g.is_empty())
        return seen;
    std::deque<int> queue{Graph::root_node};
    seen[Graph::root_node] = true;
    while (! queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (auto r : all_rels)
            for (int w : g.successors(r, v))
                if (! seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
    }
    return seen;
}

namespace {
    // Cycle detection restricted to non-null nodes; null is a sink there
    // (its only outgoing edges are the self-loops).
    bool has_plain_cycle(const Graph & g)
    {
        int n = g.node_count();
        std::vector<int> state(n, 0); // 0 new, 1 on stack, 2 done
        std::vector<std::pair<int, int>> stack;
        for (int start = 0; start < n; ++start) {
            if (start == Graph::null_node || state[start] != 0)
                continue;
            stack.emplace_back(start, 0);
            state[start] = 1;
            while (! stack.empty()) {
                auto & [v, pos] = stack.back();
                // merged successor walk over both relations
                auto s1 = g.successors(Rel::s1, v);
                auto s2 = g.successors(Rel::s2, v);
                int total = int(s1.size() + s2.size());
                if (pos == total) {
                    state[v] = 2;
                    stack.pop_back();
                    continue;
                }
                int w = pos < int(s1.size()) ? s1[pos] : s2[pos - s1.size()];
                ++pos;
                if (w == Graph::null_node)
                    continue;
                if (state[w] == 1)
                    return true;
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.emplace_back(w, 0);
                }
            }
        }
        return false;
    }
}

Classification classify(const Graph & g)
{
    Classification c;
    if (g.is_empty())
        return c;

    auto reach = reachable_from_root(g);
    bool plain_reachable = true;
    for (int v = 0; v < g.node_count(); ++v)
        if (v != Graph::null_node && ! reach[v])
            plain_reachable = false;

    bool total = true;
    for (int v = 0; v < g.node_count(); ++v)
        for (auto r : all_rels)
            if (g.successors(r, v).size() != 1)
                total = false;

    c.is_heap = total && plain_reachable;

    // Tree: null is exempt from the in-degree bound and from acyclicity (every
    // leaf points at it, and it always self-loops).
    bool indeg_ok = true;
    for (int v = 0; v < g.node_count(); ++v)
        if (v != Graph::null_node && in_degree(g, v) > 1)
            indeg_ok = false;
    c.is_tree = plain_reachable && indeg_ok && ! has_plain_cycle(g);

    if (c.is_tree) {
        bool at_most_one = true;
        for (int v = 0; v < g.node_count(); ++v) {
            if (v == Graph::null_node)
                continue;
            int non_null_out = 0;
            for (auto r : all_rels)
                for (int w : g.successors(r, v))
                    if (w != Graph::null_node)
                        ++non_null_out;
            if (non_null_out > 1)
                at_most_one = false;
        }
        c.is_list = at_most_one;
    }

    auto root_s2 = g.successors(Rel::s2, Graph::root_node);
    c.is_orable = root_s2.size() == 1 && root_s2[0] == Graph::null_node;
    return c;
}

int in_degree(const Graph & g, int x, bool exclude_null_self_loops)
{
    if (x < 0 || x >= g.node_count())
        throw PreconditionError("in_degree: node not in graph");
    std::set<int> sources;
    for (auto r : all_rels)
        for (int y : g.predecessors(r, x))
            sources.insert(y);
    if (exclude_null_self_loops && x == Graph::null_node)
        sources.erase(Graph::null_node);
    return int(sources.size());
}

namespace {
    std::vector<std::string> tokenize(const std::string & line)
    {
        std::vector<std::string> tokens;
        std::istringstream in(line);
        std::string tok;
        while (in >> tok) {
            if (tok[0] == '#')
                break;
            tokens.push_back(tok);
        }
        return tokens;
    }
}

Graph parse_graph(std::string_view text)
{
    GraphBuilder builder;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty())
            continue;
        try {
            if (tokens[0] == "node") {
                if (tokens.size() != 2)
                    throw ParseError("expected: node <id>", line_no);
                builder.declare_node(tokens[1]);
            }
            else if (tokens[0] == "s1" || tokens[0] == "s2") {
                if (tokens.size() != 3)
                    throw ParseError("expected: " + tokens[0] + " <from> <to>", line_no);
                Rel r = tokens[0] == "s1" ? Rel::s1 : Rel::s2;
                builder.add_edge(r, tokens[1], tokens[2], true);
            }
            else
                throw ParseError("unknown directive '" + tokens[0] + "'", line_no);
        }
        catch (const InvalidGraphError & e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return std::move(builder).validate();
}

Graph load_graph(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string serialize(const Graph & g)
{
    std::ostringstream out;
    for (int v = Graph::first_plain; v < g.node_count(); ++v)
        out << "node " << g.id(v) << "\n";
    for (auto r : all_rels) {
        std::vector<std::pair<std::string, std::string>> lines;
        for (auto [from, to] : g.edges(r)) {
            if (from == Graph::null_node)
                continue; // ambient self-loops stay implicit
            lines.emplace_back(g.id(from), g.id(to));
        }
        std::sort(lines.begin(), lines.end());
        for (auto & [from, to] : lines)
            out << (r == Rel::s1 ? "s1 " : "s2 ") << from << " " << to << "\n";
    }
    return out.str();
}

void save_graph(const Graph & g, const std::string & path)
{
    std::ofstream out(path);
    if (! out)
        throw std::runtime_error("cannot write graph file: " + path);
    out << serialize(g);
}

}
