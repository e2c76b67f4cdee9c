#include "rgc/emsol.hpp"
#include "rgc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rgc {

EmsolFormula emit_formula(const Graph & target)
{
    if (target.is_empty())
        throw PreconditionError("emit_formula: empty target");
    EmsolFormula f;
    f.k = target.node_count();
    for (int v = 0; v < f.k; ++v)
        f.color_ids.push_back(target.id(v));
    for (int r = 0; r < 2; ++r) {
        f.allowed[r].resize(f.k);
        for (int v = 0; v < f.k; ++v) {
            auto succ = target.successors(static_cast<Rel>(r), v);
            f.allowed[r][v].assign(succ.begin(), succ.end());
        }
    }
    return f;
}

namespace {
    std::string var_list(int k)
    {
        std::string out;
        for (int i = 0; i < k; ++i) {
            if (i)
                out += ",";
            out += "X" + std::to_string(i);
        }
        return out;
    }

    std::string disjunction_over(const std::vector<int> & colors)
    {
        if (colors.empty())
            return "FALSE";
        std::string out = "(";
        for (std::size_t i = 0; i < colors.size(); ++i) {
            if (i)
                out += " OR ";
            out += "X" + std::to_string(colors[i]) + "(y)";
        }
        return out + ")";
    }
}

std::string render_formula(const EmsolFormula & f)
{
    std::ostringstream out;
    out << "EXISTS " << var_list(f.k) << " .\n";
    out << "partit(" << var_list(f.k) << ") AND singl(X0,null) AND singl(X1,root) AND\n";
    out << "ALL x .";
    for (int j = 0; j < f.k; ++j)
        out << (j ? " AND " : " ") << "(X" << j << "(x) => P_" << j << "(x))";
    out << "\n";
    for (int j = 0; j < f.k; ++j) {
        out << "P_" << j << "(x) = P1_" << j << "(x) AND P2_" << j << "(x)\n";
        for (int r = 0; r < 2; ++r)
            out << "P" << r + 1 << "_" << j << "(x) = ALL y . s" << r + 1
                << "(x,y) => " << disjunction_over(f.allowed[r][j]) << "\n";
    }
    out << "# colors:";
    for (int j = 0; j < f.k; ++j)
        out << " X" << j << "=" << (j < int(f.color_ids.size()) ? f.color_ids[j] : "?");
    out << "\n";
    return out.str();
}

EmsolFormula parse_formula(std::string_view text)
{
    EmsolFormula f;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool seen_header = false, seen_partit = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#')
            continue;
        if (line.rfind("EXISTS ", 0) == 0) {
            auto vars = line.substr(7);
            f.k = int(std::count(vars.begin(), vars.end(), ',')) + 1;
            if (f.k < 2)
                throw ParseError("formula needs at least the null and root colors", line_no);
            for (int j = 0; j < f.k; ++j)
                f.color_ids.push_back("X" + std::to_string(j));
            f.allowed[0].resize(f.k);
            f.allowed[1].resize(f.k);
            seen_header = true;
            continue;
        }
        if (line.rfind("partit(", 0) == 0) {
            if (line.find("singl(X0,null)") == std::string::npos ||
                line.find("singl(X1,root)") == std::string::npos)
                throw ParseError("expected the partit/singl constraint line", line_no);
            seen_partit = true;
            continue;
        }
        if (line.rfind("ALL x .", 0) == 0 || line.rfind("P_", 0) == 0)
            continue; // fixed template material
        if (line.rfind("P", 0) == 0) {
            // P<i>_<j>(x) = ALL y . s<i>(x,y) => <disjunction>
            std::istringstream ls(line);
            char p;
            int rel, j;
            char underscore;
            ls >> p >> rel >> underscore >> j;
            if (! ls || p != 'P' || (rel != 1 && rel != 2) || underscore != '_')
                throw ParseError("malformed successor clause", line_no);
            if (! seen_header || j < 0 || j >= f.k)
                throw ParseError("clause color out of range", line_no);
            auto arrow = line.find("=>");
            if (arrow == std::string::npos)
                throw ParseError("malformed successor clause", line_no);
            std::string rhs = line.substr(arrow + 2);
            std::vector<int> colors;
            for (std::size_t i = 0; i < rhs.size(); ++i)
                if (rhs[i] == 'X') {
                    std::size_t end = i + 1;
                    while (end < rhs.size() && isdigit(rhs[end]))
                        ++end;
                    colors.push_back(std::stoi(rhs.substr(i + 1, end - i - 1)));
                    i = end;
                }
            if (colors.empty() && rhs.find("FALSE") == std::string::npos)
                throw ParseError("malformed successor clause", line_no);
            for (int c : colors)
                if (c < 0 || c >= f.k)
                    throw ParseError("clause color out of range", line_no);
            std::sort(colors.begin(), colors.end());
            f.allowed[rel - 1][j] = std::move(colors);
            continue;
        }
        throw ParseError("unrecognized formula line", line_no);
    }
    if (! seen_header || ! seen_partit)
        throw ParseError("missing formula header", line_no);
    return f;
}

bool eval_formula(const Graph & g, const EmsolFormula & f, int max_plain_nodes)
{
    if (g.is_empty())
        throw PreconditionError("eval_formula: empty graph");
    int plain = g.plain_count();
    if (plain > max_plain_nodes)
        throw PreconditionError("eval_formula: graph exceeds the evaluation size guard");

    std::array<std::vector<std::vector<bool>>, 2> allowed_set;
    for (int r = 0; r < 2; ++r) {
        allowed_set[r].assign(f.k, std::vector<bool>(f.k, false));
        for (int j = 0; j < f.k; ++j)
            for (int l : f.allowed[r][j])
                allowed_set[r][j][l] = true;
    }

    std::vector<int> color(g.node_count(), -1);
    color[Graph::null_node] = 0;
    color[Graph::root_node] = 1;

    auto edges_ok = [&] {
        for (auto r : all_rels)
            for (int v = 0; v < g.node_count(); ++v)
                for (int w : g.successors(r, v))
                    if (! allowed_set[static_cast<int>(r)][color[v]][color[w]])
                        return false;
        return true;
    };

    if (plain == 0)
        return edges_ok();
    if (f.k <= 2)
        return false; // no colors left for plain nodes

    // odometer over colorings, the partition and singleton constraints force
    // plain nodes into colors 2..k-1
    std::vector<int> digits(plain, 2);
    while (true) {
        for (int i = 0; i < plain; ++i)
            color[Graph::first_plain + i] = digits[i];
        if (edges_ok())
            return true;
        int pos = plain - 1;
        while (pos >= 0 && digits[pos] == f.k - 1)
            digits[pos--] = 2;
        if (pos < 0)
            return false;
        ++digits[pos];
    }
}

namespace {

    void check_flex(const FlexExpr & e, int k, bool positive)
    {
        switch (e.kind) {
        case FlexExpr::Kind::edge:
            if (positive)
                throw PreconditionError("flexible formula: edge atom must occur negatively");
            return;
        case FlexExpr::Kind::var_x:
        case FlexExpr::Kind::var_y:
            if (e.index < 0 || e.index >= k)
                throw PreconditionError("flexible formula: variable index out of range");
            return;
        case FlexExpr::Kind::truth:
            return;
        case FlexExpr::Kind::negation:
            check_flex(*e.left, k, ! positive);
            return;
        case FlexExpr::Kind::conjunction:
        case FlexExpr::Kind::disjunction:
            check_flex(*e.left, k, positive);
            check_flex(*e.right, k, positive);
            return;
        case FlexExpr::Kind::implication:
            check_flex(*e.left, k, ! positive);
            check_flex(*e.right, k, positive);
            return;
        }
    }

    std::string render_expr(const FlexExpr & e, int rel)
    {
        switch (e.kind) {
        case FlexExpr::Kind::edge:
            return "s" + std::to_string(rel) + "(x,y)";
        case FlexExpr::Kind::var_x:
            return "X" + std::to_string(e.index) + "(x)";
        case FlexExpr::Kind::var_y:
            return "X" + std::to_string(e.index) + "(y)";
        case FlexExpr::Kind::truth:
            return e.value ? "TRUE" : "FALSE";
        case FlexExpr::Kind::negation:
            return "NOT " + render_expr(*e.left, rel);
        case FlexExpr::Kind::conjunction:
            return "(" + render_expr(*e.left, rel) + " AND " + render_expr(*e.right, rel) + ")";
        case FlexExpr::Kind::disjunction:
            return "(" + render_expr(*e.left, rel) + " OR " + render_expr(*e.right, rel) + ")";
        case FlexExpr::Kind::implication:
            return "(" + render_expr(*e.left, rel) + " => " + render_expr(*e.right, rel) + ")";
        }
        return "?";
    }

    struct FlexParser {
        std::string_view text;
        std::size_t pos = 0;
        int rel;
        int k;

        void skip_ws()
        {
            while (pos < text.size() && text[pos] == ' ')
                ++pos;
        }

        bool eat(std::string_view tok)
        {
            skip_ws();
            if (text.substr(pos, tok.size()) == tok) {
                pos += tok.size();
                return true;
            }
            return false;
        }

        [[noreturn]] void fail(const std::string & msg)
        {
            throw PreconditionError("flexible formula: " + msg);
        }

        FlexExpr parse()
        {
            skip_ws();
            if (eat("NOT ")) {
                FlexExpr e;
                e.kind = FlexExpr::Kind::negation;
                e.left = std::make_shared<FlexExpr>(parse());
                return e;
            }
            if (eat("(")) {
                FlexExpr l = parse();
                FlexExpr::Kind kind;
                if (eat("AND "))
                    kind = FlexExpr::Kind::conjunction;
                else if (eat("OR "))
                    kind = FlexExpr::Kind::disjunction;
                else if (eat("=> "))
                    kind = FlexExpr::Kind::implication;
                else
                    fail("expected binary operator");
                FlexExpr r = parse();
                if (! eat(")"))
                    fail("missing ')'");
                FlexExpr e;
                e.kind = kind;
                e.left = std::make_shared<FlexExpr>(std::move(l));
                e.right = std::make_shared<FlexExpr>(std::move(r));
                return e;
            }
            if (eat("TRUE")) {
                FlexExpr e;
                e.kind = FlexExpr::Kind::truth;
                e.value = true;
                return e;
            }
            if (eat("FALSE")) {
                FlexExpr e;
                e.kind = FlexExpr::Kind::truth;
                e.value = false;
                return e;
            }
            std::string srel = "s" + std::to_string(rel) + "(x,y)";
            if (eat(srel)) {
                FlexExpr e;
                e.kind = FlexExpr::Kind::edge;
                return e;
            }
            if (eat("X")) {
                std::size_t start = pos;
                while (pos < text.size() && isdigit(text[pos]))
                    ++pos;
                if (pos == start)
                    fail("expected variable index");
                FlexExpr e;
                e.index = std::stoi(std::string(text.substr(start, pos - start)));
                if (eat("(x)"))
                    e.kind = FlexExpr::Kind::var_x;
                else if (eat("(y)"))
                    e.kind = FlexExpr::Kind::var_y;
                else
                    fail("expected (x) or (y)");
                return e;
            }
            fail("unexpected token at '" + std::string(text.substr(pos, 12)) + "'");
        }
    };

}

bool flex_equal(const FlexExpr & a, const FlexExpr & b)
{
    if (a.kind != b.kind || a.index != b.index || a.value != b.value)
        return false;
    if ((a.left != nullptr) != (b.left != nullptr))
        return false;
    if ((a.right != nullptr) != (b.right != nullptr))
        return false;
    if (a.left && ! flex_equal(*a.left, *b.left))
        return false;
    if (a.right && ! flex_equal(*a.right, *b.right))
        return false;
    return true;
}

std::string render_flexible(const FlexFormula & f)
{
    if (f.k < 2)
        throw PreconditionError("flexible formula: needs at least the null and root variables");
    check_flex(f.b1, f.k, true);
    check_flex(f.b2, f.k, true);
    std::ostringstream out;
    out << "EXISTS " << var_list(f.k) << " .\n";
    out << "singl(X0,null) AND singl(X1,root) AND\n";
    out << "ALL x . ALL y .\n";
    out << "B1: " << render_expr(f.b1, 1) << "\n";
    out << "B2: " << render_expr(f.b2, 2) << "\n";
    return out.str();
}

FlexFormula parse_flexible(std::string_view text)
{
    FlexFormula f;
    std::istringstream in{std::string(text)};
    std::string line;
    bool seen_header = false, seen_b1 = false, seen_b2 = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (line.rfind("EXISTS ", 0) == 0) {
            auto vars = line.substr(7);
            f.k = int(std::count(vars.begin(), vars.end(), ',')) + 1;
            seen_header = true;
            continue;
        }
        if (line.rfind("singl(", 0) == 0 || line.rfind("ALL x", 0) == 0)
            continue;
        if (line.rfind("B1: ", 0) == 0) {
            std::string body = line.substr(4);
            FlexParser parser{body, 0, 1, f.k};
            f.b1 = parser.parse();
            seen_b1 = true;
            continue;
        }
        if (line.rfind("B2: ", 0) == 0) {
            std::string body = line.substr(4);
            FlexParser parser{body, 0, 2, f.k};
            f.b2 = parser.parse();
            seen_b2 = true;
            continue;
        }
        throw PreconditionError("flexible formula: unrecognized line: " + line);
    }
    if (! seen_header || ! seen_b1 || ! seen_b2)
        throw PreconditionError("flexible formula: missing header or clause");
    check_flex(f.b1, f.k, true);
    check_flex(f.b2, f.k, true);
    return f;
}

}
