#include "rgc/closure.hpp"
#include "rgc/errors.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace rgc {

Graph product(const Graph & a, const Graph & b)
{
    if (a.is_empty() || b.is_empty())
        throw std::invalid_argument("product: empty operand");

    // node of the product <-> (node of a, node of b); only like-with-like
    // pairs survive
    std::map<std::pair<int, int>, std::string> names;
    names[{Graph::null_node, Graph::null_node}] = "null";
    names[{Graph::root_node, Graph::root_node}] = "root";
    GraphBuilder builder;
    for (int x = Graph::first_plain; x < a.node_count(); ++x)
        for (int y = Graph::first_plain; y < b.node_count(); ++y) {
            std::string id = "⟨" + a.id(x) + "|" + b.id(y) + "⟩";
            names[{x, y}] = id;
            builder.declare_node(id);
        }

    for (auto r : all_rels)
        for (auto [x1, y1] : a.edges(r))
            for (auto [x2, y2] : b.edges(r)) {
                auto from = names.find({x1, x2});
                auto to = names.find({y1, y2});
                if (from == names.end() || to == names.end())
                    continue;
                if (from->second == "null")
                    continue; // ambient
                builder.add_edge(r, from->second, to->second);
            }
    return std::move(builder).validate();
}

Graph sum(const Graph & a, const Graph & b)
{
    if (a.is_empty() || b.is_empty())
        throw std::invalid_argument("sum: empty operand");
    if (! classify(a).is_orable)
        throw NotOrableError("sum: first operand is not orable");
    if (! classify(b).is_orable)
        throw NotOrableError("sum: second operand is not orable");

    std::set<std::string> a_ids, b_ids;
    for (int v = Graph::first_plain; v < a.node_count(); ++v)
        a_ids.insert(a.id(v));
    for (int v = Graph::first_plain; v < b.node_count(); ++v)
        b_ids.insert(b.id(v));

    auto rename = [&](const Graph & g, int v, const char * suffix) -> std::string {
        if (v < Graph::first_plain)
            return g.id(v);
        const std::string & id = g.id(v);
        if (a_ids.contains(id) && b_ids.contains(id))
            return id + suffix;
        return id;
    };

    GraphBuilder builder;
    for (int v = Graph::first_plain; v < a.node_count(); ++v)
        builder.declare_node(rename(a, v, "#1"));
    for (int v = Graph::first_plain; v < b.node_count(); ++v)
        builder.declare_node(rename(b, v, "#2"));

    auto copy_edges = [&](const Graph & g, const char * suffix) {
        for (auto r : all_rels)
            for (auto [from, to] : g.edges(r)) {
                if (from == Graph::null_node)
                    continue;
                builder.add_edge(r, rename(g, from, suffix), rename(g, to, suffix));
            }
    };
    copy_edges(a, "#1");
    copy_edges(b, "#2");
    return std::move(builder).validate();
}

}
