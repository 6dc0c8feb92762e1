#include "knotlib/knotspec.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace knotlib {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw parse_error(std::string("expected '") + c + "'", pos);
    }
    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit((unsigned char)s[start])))
            throw parse_error("expected integer", start);
        return std::stol(s.substr(start, pos - start));
    }
    std::vector<long> int_list(char close) {
        std::vector<long> out;
        if (peek() != close) {
            out.push_back(integer());
            while (accept(',')) out.push_back(integer());
        }
        expect(close);
        return out;
    }
};

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+';
}

// atom := T(p,q) | P(a,b,c) | B[letters]@n | PD literal | NAME
std::string lex_atom(Lexer& lx) {
    lx.skip_ws();
    size_t start = lx.pos;
    char c = lx.peek();
    if (c == 'T' || c == 'P') {
        ++lx.pos;
        if (lx.peek() == '(') {
            lx.expect('(');
            lx.int_list(')');
            return lx.s.substr(start, lx.pos - start);
        }
        lx.pos = start;  // a name beginning with T/P
    }
    if (c == 'B') {
        ++lx.pos;
        if (lx.peek() == '[') {
            lx.expect('[');
            lx.int_list(']');
            lx.expect('@');
            lx.integer();
            return lx.s.substr(start, lx.pos - start);
        }
        lx.pos = start;
    }
    if (c == 'X') {
        // PD literal: one or more X tuples
        while (lx.peek() == 'X') {
            ++lx.pos;
            if (lx.peek() == '+' || lx.peek() == '-') ++lx.pos;
            lx.expect('(');
            lx.int_list(')');
            size_t save = lx.pos;
            if (!lx.accept(',')) break;
            if (lx.peek() != 'X') {
                lx.pos = save;
                break;
            }
        }
        return lx.s.substr(start, lx.pos - start);
    }
    if (!name_char(c)) throw parse_error("expected knot atom", lx.pos);
    while (lx.pos < lx.s.size() && name_char(lx.s[lx.pos])) ++lx.pos;
    return lx.s.substr(start, lx.pos - start);
}

ExprNode parse_expr_rec(Lexer& lx) {
    auto parse_factor = [&]() -> ExprNode {
        if (lx.accept('-')) {
            ExprNode m;
            m.kind = ExprNode::Kind::Mirror;
            ExprNode inner;
            if (lx.accept('(')) {
                inner = parse_expr_rec(lx);
                lx.expect(')');
            } else {
                inner.kind = ExprNode::Kind::Atom;
                inner.name = lex_atom(lx);
            }
            m.children.push_back(std::move(inner));
            return m;
        }
        if (lx.accept('(')) {
            ExprNode inner = parse_expr_rec(lx);
            lx.expect(')');
            return inner;
        }
        ExprNode a;
        a.kind = ExprNode::Kind::Atom;
        a.name = lex_atom(lx);
        return a;
    };
    ExprNode first = parse_factor();
    if (lx.peek() != '#') return first;
    ExprNode sum;
    sum.kind = ExprNode::Kind::Sum;
    sum.children.push_back(std::move(first));
    while (lx.accept('#')) sum.children.push_back(parse_factor());
    return sum;
}

}  // namespace

ExprNode parse_knot_expr(const std::string& text) {
    Lexer lx{text};
    ExprNode e = parse_expr_rec(lx);
    if (!lx.eof()) throw parse_error("trailing input", lx.pos);
    return e;
}

std::string print_expr(const ExprNode& e) {
    switch (e.kind) {
        case ExprNode::Kind::Atom:
            return e.name;
        case ExprNode::Kind::Mirror: {
            const ExprNode& k = e.children.at(0);
            if (k.kind == ExprNode::Kind::Atom) return "-" + k.name;
            return "-(" + print_expr(k) + ")";
        }
        case ExprNode::Kind::Sum: {
            std::string out;
            for (size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += " # ";
                out += print_expr(e.children[i]);
            }
            return out;
        }
    }
    return "";
}

static void flatten_into(const ExprNode& e, int sign, std::map<std::string, int>& out) {
    switch (e.kind) {
        case ExprNode::Kind::Atom:
            out[e.name] += sign;
            if (out[e.name] == 0) out.erase(e.name);
            break;
        case ExprNode::Kind::Mirror:
            flatten_into(e.children.at(0), -sign, out);
            break;
        case ExprNode::Kind::Sum:
            for (const auto& k : e.children) flatten_into(k, sign, out);
            break;
    }
}

std::map<std::string, int> flatten_expr(const ExprNode& e) {
    std::map<std::string, int> out;
    flatten_into(e, +1, out);
    return out;
}

ExprNode expr_from_flat(const std::map<std::string, int>& flat) {
    std::vector<ExprNode> parts;
    for (const auto& [name, mult] : flat) {
        for (int i = 0; i < std::abs(mult); ++i) {
            ExprNode a;
            a.kind = ExprNode::Kind::Atom;
            a.name = name;
            if (mult < 0) {
                ExprNode m;
                m.kind = ExprNode::Kind::Mirror;
                m.children.push_back(std::move(a));
                parts.push_back(std::move(m));
            } else {
                parts.push_back(std::move(a));
            }
        }
    }
    if (parts.empty()) {
        ExprNode a;
        a.kind = ExprNode::Kind::Atom;
        a.name = "unknot";
        return a;
    }
    if (parts.size() == 1) return parts[0];
    ExprNode sum;
    sum.kind = ExprNode::Kind::Sum;
    sum.children = std::move(parts);
    return sum;
}

Diagram torus_diagram(int p, int q) {
    if (p < 0) return torus_diagram(-p, q).mirror();
    if (q < 0) return torus_diagram(p, -q).mirror();
    if (p > q) std::swap(p, q);  // T(p,q) = T(q,p); braid on fewer strands
    if (p <= 1) return Diagram::unknot();
    std::vector<int> word;
    for (int rep = 0; rep < q; ++rep)
        for (int i = 1; i < p; ++i) word.push_back(i);
    return Diagram::from_braid(word, p);
}

Diagram parse_pd(const std::string& text) {
    Lexer lx{text};
    std::vector<std::array<int, 4>> tuples;
    std::vector<int> signs;
    bool any_sign = false;
    while (!lx.eof()) {
        lx.expect('X');
        int sgn = 0;
        if (lx.accept('+'))
            sgn = +1;
        else if (lx.accept('-'))
            sgn = -1;
        lx.expect('(');
        auto v = lx.int_list(')');
        if (v.size() != 4) throw parse_error("PD tuple needs 4 arcs", lx.pos);
        tuples.push_back({(int)v[0], (int)v[1], (int)v[2], (int)v[3]});
        signs.push_back(sgn);
        if (sgn != 0) any_sign = true;
        lx.accept(',');
    }
    if (tuples.empty()) throw parse_error("empty PD code", 0);
    return Diagram::from_pd(tuples, any_sign ? signs : std::vector<int>{});
}

std::vector<std::string> known_names(const std::string& data_dir) {
    std::vector<std::string> out = {"unknot", "trefoil", "hopf+"};
    std::error_code ec;
    for (const auto& ent :
         std::filesystem::directory_iterator(data_dir + "/pd", ec)) {
        if (ent.path().extension() == ".pd") out.push_back(ent.path().stem().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Diagram resolve_atom(const std::string& atom, const std::string& data_dir) {
    Lexer lx{atom};
    char c = lx.peek();
    if (c == 'T' && atom.find('(') != std::string::npos) {
        ++lx.pos;
        lx.expect('(');
        auto v = lx.int_list(')');
        if (v.size() != 2) throw parse_error("T(p,q) needs two entries", lx.pos);
        return torus_diagram((int)v[0], (int)v[1]);
    }
    if (c == 'P' && atom.find('(') != std::string::npos) {
        ++lx.pos;
        lx.expect('(');
        auto v = lx.int_list(')');
        if (v.size() != 3) throw parse_error("P(a,b,c) needs three entries", lx.pos);
        return Diagram::pretzel((int)v[0], (int)v[1], (int)v[2]);
    }
    if (c == 'B' && atom.find('[') != std::string::npos) {
        ++lx.pos;
        lx.expect('[');
        auto w = lx.int_list(']');
        lx.expect('@');
        int strands = (int)lx.integer();
        std::vector<int> word(w.begin(), w.end());
        return Diagram::from_braid(word, strands);
    }
    if (c == 'X') return parse_pd(atom);
    if (atom == "unknot") return Diagram::unknot();
    if (atom == "trefoil") return Diagram::from_braid({1, 1, 1}, 2);
    if (atom == "hopf+") return Diagram::from_braid({1, 1}, 2);

    std::string path = data_dir + "/pd/" + atom + ".pd";
    std::ifstream in(path);
    if (!in) {
        std::string msg = "unknown knot name '" + atom + "'; known names:";
        for (const auto& n : known_names(data_dir)) msg += " " + n;
        throw std::invalid_argument(msg);
    }
    std::string line, pd;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        pd += line + " ";
    }
    return parse_pd(pd);
}

Diagram connected_sum_diagram(const Diagram& d1, const Diagram& d2) {
    if (d1.crossing_count() == 0 && d1.free_loops() == 1) return d2;
    if (d2.crossing_count() == 0 && d2.free_loops() == 1) return d1;
    if (d1.crossing_count() == 0 || d2.crossing_count() == 0)
        throw std::invalid_argument("connected_sum_diagram: knot diagrams required");

    // shift arcs of d2 out of d1's range
    int shift = 0;
    for (const auto& c : d1.crossings())
        for (int s = 0; s < 4; ++s) shift = std::max(shift, c.arc[s] + 1);
    std::vector<Crossing> cs = d1.crossings();
    for (const auto& c : d2.crossings()) {
        Crossing cc = c;
        for (int s = 0; s < 4; ++s) cc.arc[s] += shift;
        cs.push_back(cc);
    }
    // splice the lowest arc of each: swap their incoming occurrences
    int x = d1.crossings()[0].arc[0];
    for (const auto& c : d1.crossings())
        for (int s = 0; s < 4; ++s) x = std::min(x, c.arc[s]);
    int y = d2.crossings()[0].arc[0] + shift;
    for (const auto& c : d2.crossings())
        for (int s = 0; s < 4; ++s) y = std::min(y, c.arc[s] + shift);

    auto incoming_site = [&](int arc) -> std::pair<size_t, int> {
        for (size_t i = 0; i < cs.size(); ++i) {
            const auto& c = cs[i];
            if (c.arc[0] == arc) return {i, 0};
            int over_in = c.sign > 0 ? 3 : 1;
            if (c.arc[over_in] == arc) return {i, over_in};
        }
        throw std::logic_error("arc without incoming site");
    };
    auto [ci, si] = incoming_site(x);
    auto [cj, sj] = incoming_site(y);
    cs[ci].arc[si] = y;
    cs[cj].arc[sj] = x;
    return Diagram(std::move(cs), d1.free_loops() + d2.free_loops());
}

Diagram resolve_expr(const ExprNode& e, const std::string& data_dir) {
    switch (e.kind) {
        case ExprNode::Kind::Atom:
            return resolve_atom(e.name, data_dir);
        case ExprNode::Kind::Mirror:
            return resolve_expr(e.children.at(0), data_dir).mirror();
        case ExprNode::Kind::Sum: {
            Diagram d = resolve_expr(e.children.at(0), data_dir);
            for (size_t i = 1; i < e.children.size(); ++i)
                d = connected_sum_diagram(d, resolve_expr(e.children[i], data_dir));
            return d;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace knotlib
