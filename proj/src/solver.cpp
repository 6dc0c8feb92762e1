#include "knotlib/solver.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace knotlib {

std::string expr_str(const KnotExpr& e) {
    if (e.empty()) return "unknot";
    std::string out;
    for (const auto& [name, mult] : e)
        for (int i = 0; i < std::abs(mult); ++i) {
            if (!out.empty()) out += " # ";
            if (mult < 0) out += "-";
            out += name;
        }
    return out;
}

const RatInterval& Assignment::at(const std::string& atom) const {
    auto it = intervals.find(atom);
    if (it == intervals.end())
        throw std::domain_error("unassigned atom '" + atom + "'");
    return it->second;
}

namespace {

struct Bound {
    std::optional<Rat> lo, hi;
    std::string lo_src, hi_src;

    bool bounded() const { return lo && hi; }
};

struct State {
    std::map<std::string, Bound> atoms;
    std::optional<Lattice> lattice;
    bool changed = false;

    void touch_atoms(const KnotExpr& e) {
        for (const auto& [name, mult] : e) atoms.try_emplace(name);
    }

    // interval of a formal sum; absent when some needed bound is missing
    std::pair<std::optional<Rat>, std::optional<Rat>> eval(const KnotExpr& e) const {
        Rat lo = 0, hi = 0;
        bool has_lo = true, has_hi = true;
        for (const auto& [name, mult] : e) {
            auto it = atoms.find(name);
            const Bound* b = it == atoms.end() ? nullptr : &it->second;
            auto blo = b ? b->lo : std::nullopt;
            auto bhi = b ? b->hi : std::nullopt;
            if (mult >= 0) {
                if (blo)
                    lo += Rat(mult) * *blo;
                else
                    has_lo = false;
                if (bhi)
                    hi += Rat(mult) * *bhi;
                else
                    has_hi = false;
            } else {
                if (bhi)
                    lo += Rat(mult) * *bhi;
                else
                    has_lo = false;
                if (blo)
                    hi += Rat(mult) * *blo;
                else
                    has_hi = false;
            }
        }
        return {has_lo ? std::optional<Rat>(lo) : std::nullopt,
                has_hi ? std::optional<Rat>(hi) : std::nullopt};
    }

    void narrow_atom(const std::string& name, std::optional<Rat> lo,
                     std::optional<Rat> hi, const std::string& src) {
        Bound& b = atoms[name];
        if (lo && lattice) {
            // round up to the lattice
            Rat k = -rat_floor((lattice->offset - *lo) / lattice->step);
            lo = lattice->offset + k * lattice->step;
        }
        if (hi && lattice) {
            Rat k = rat_floor((*hi - lattice->offset) / lattice->step);
            hi = lattice->offset + k * lattice->step;
        }
        if (lo && (!b.lo || *lo > *b.lo)) {
            b.lo = lo;
            b.lo_src = src;
            changed = true;
        }
        if (hi && (!b.hi || *hi < *b.hi)) {
            b.hi = hi;
            b.hi_src = src;
            changed = true;
        }
        if (b.lo && b.hi && *b.lo > *b.hi)
            throw contradiction_error(
                "contradiction at '" + name + "': lower bound " + rat_str(*b.lo) +
                " (from: " + b.lo_src + ") exceeds upper bound " + rat_str(*b.hi) +
                " (from: " + b.hi_src + ")");
    }

    // impose [lo, hi] (either optional) on the formal sum e
    void narrow_expr(const KnotExpr& e, std::optional<Rat> lo, std::optional<Rat> hi,
                     const std::string& src) {
        touch_atoms(e);
        for (const auto& [name, mult] : e) {
            // bounds of e minus the mult*name summand
            KnotExpr rest = e;
            rest.erase(name);
            auto [rlo, rhi] = eval(rest);
            std::optional<Rat> nlo, nhi;
            // mult*name in [lo - rest_hi, hi - rest_lo]
            std::optional<Rat> tlo, thi;
            if (lo && rhi) tlo = *lo - *rhi;
            if (hi && rlo) thi = *hi - *rlo;
            if (mult > 0) {
                if (tlo) nlo = *tlo / mult;
                if (thi) nhi = *thi / mult;
            } else {
                if (thi) nlo = *thi / mult;
                if (tlo) nhi = *tlo / mult;
            }
            narrow_atom(name, nlo, nhi, src);
        }
    }
};

}  // namespace

Assignment propagate(const std::vector<Constraint>& constraints,
                     const std::string& invariant, std::optional<Lattice> lattice) {
    State st;
    st.lattice = lattice;
    for (const auto& c : constraints) {
        if (c.kind == Constraint::Kind::Lattice && c.invariant == invariant) {
            if (st.lattice)
                throw std::invalid_argument("multiple lattices for " + invariant);
            st.lattice = Lattice{c.step, c.offset};
        }
    }
    bool is_s2_like = (invariant == "s_2" || invariant == "2tau");

    const int kMaxRounds = 200;
    for (int round = 0; round < kMaxRounds; ++round) {
        st.changed = false;
        for (const auto& c : constraints) {
            switch (c.kind) {
                case Constraint::Kind::Value:
                    if (c.invariant == invariant)
                        st.narrow_expr(c.e1, c.payload.lo(), c.payload.hi(), c.src);
                    break;
                case Constraint::Kind::Bennequin:
                    st.narrow_expr(c.e1, c.payload.lo(), c.payload.hi(), c.src);
                    break;
                case Constraint::Kind::CrossingChange: {
                    // 0 <= v(e1) - v(e2) <= 2*count
                    auto [lo1, hi1] = st.eval(c.e1);
                    auto [lo2, hi2] = st.eval(c.e2);
                    std::optional<Rat> nlo, nhi;
                    if (lo2) nlo = *lo2;
                    if (hi2) nhi = *hi2 + rat(2 * c.count);
                    st.narrow_expr(c.e1, nlo, nhi, c.src);
                    nlo.reset();
                    nhi.reset();
                    if (lo1) nlo = *lo1 - rat(2 * c.count);
                    if (hi1) nhi = *hi1;
                    st.narrow_expr(c.e2, nlo, nhi, c.src);
                    break;
                }
                case Constraint::Kind::Cobordism: {
                    // |v(e1) - v(e2)| <= -chi
                    Rat span = -c.chi;
                    if (span < 0)
                        throw std::invalid_argument("cobordism with chi > 0: " + c.src);
                    auto [lo1, hi1] = st.eval(c.e1);
                    auto [lo2, hi2] = st.eval(c.e2);
                    std::optional<Rat> nlo, nhi;
                    if (lo2) nlo = *lo2 - span;
                    if (hi2) nhi = *hi2 + span;
                    st.narrow_expr(c.e1, nlo, nhi, c.src);
                    nlo.reset();
                    nhi.reset();
                    if (lo1) nlo = *lo1 - span;
                    if (hi1) nhi = *hi1 + span;
                    st.narrow_expr(c.e2, nlo, nhi, c.src);
                    break;
                }
                case Constraint::Kind::SliceGenus:
                    st.narrow_expr(c.e1, std::nullopt, Rat(2 * c.genus), c.src);
                    break;
                case Constraint::Kind::Alternating:
                    st.narrow_expr(c.e1, rat(c.sigma), rat(c.sigma), c.src);
                    break;
                case Constraint::Kind::QuasiAlternating:
                    if (is_s2_like)
                        st.narrow_expr(c.e1, rat(c.sigma), rat(c.sigma), c.src);
                    break;
                case Constraint::Kind::Lattice:
                    break;
            }
        }
        if (!st.changed) break;
    }

    Assignment out;
    for (const auto& [name, b] : st.atoms) {
        if (!b.bounded()) continue;
        RatInterval iv(*b.lo, *b.hi);
        if (st.lattice) iv = iv.with_lattice(st.lattice->step, st.lattice->offset);
        out.intervals.emplace(name, iv);
    }
    return out;
}

RatInterval eval_expr(const KnotExpr& e, const Assignment& assignment) {
    RatInterval acc = RatInterval::point(0);
    bool first = true;
    for (const auto& [name, mult] : e) {
        RatInterval part = assignment.at(name).scaled(rat(mult));
        acc = first ? part : acc + part;
        first = false;
    }
    return acc;
}

std::string IndependenceCertificate::json() const {
    std::ostringstream os;
    os << "{\"witness\": \"" << witness << "\", \"hull\": [\"" << rat_str(hull.lo())
       << "\", \"" << rat_str(hull.hi()) << "\"], \"excluded_value\": \""
       << target_value.str() << "\", \"note\": \"" << note << "\"}";
    return os.str();
}

std::optional<IndependenceCertificate> certify_independence(
    const std::vector<std::string>& family,
    const std::map<std::string, Assignment>& values, const std::string& target,
    const Assignment& target_values, const std::vector<std::string>& witnesses,
    const std::string& tail_note) {
    if (family.empty()) throw std::invalid_argument("empty family");
    for (const std::string& w : witnesses) {
        bool ok = true;
        Rat lo, hi;
        bool first = true;
        for (const std::string& f : family) {
            auto it = values.find(f);
            if (it == values.end() || !it->second.has(w)) {
                ok = false;
                break;
            }
            const RatInterval& iv = it->second.at(w);
            if (first) {
                lo = iv.lo();
                hi = iv.hi();
                first = false;
            } else {
                lo = std::min(lo, iv.lo());
                hi = std::max(hi, iv.hi());
            }
        }
        if (!ok || first || !target_values.has(w)) continue;
        const RatInterval& tv = target_values.at(w);
        // the convex hull [lo,hi] of the family values contains every convex
        // combination; a certificate needs the target's value set disjoint
        if (tv.hi() < lo || tv.lo() > hi) {
            IndependenceCertificate cert;
            cert.witness = w;
            cert.hull = RatInterval(lo, hi);
            cert.target_value = tv;
            cert.note =
                "convex combinations (coefficients sum to 1 by the torus "
                "normalisation) of {" +
                [&] {
                    std::string s;
                    for (size_t i = 0; i < family.size(); ++i)
                        s += (i ? ", " : "") + family[i];
                    return s;
                }() +
                "} on " + w + " lie in the hull; " + target +
                " does not. " + tail_note;
            return cert;
        }
    }
    return std::nullopt;
}

namespace {

Rat parse_rat(const std::string& tok) {
    auto slash = tok.find('/');
    if (slash == std::string::npos) return rat(std::stol(tok));
    return rat(std::stol(tok.substr(0, slash)), std::stol(tok.substr(slash + 1)));
}

// interval token: "[lo,hi]" or a single rational
RatInterval parse_interval(std::string tok) {
    tok.erase(std::remove_if(tok.begin(), tok.end(),
                             [](char c) { return std::isspace((unsigned char)c); }),
              tok.end());
    if (!tok.empty() && tok.front() == '[') {
        if (tok.back() != ']') throw std::invalid_argument("bad interval " + tok);
        auto comma = tok.find(',');
        Rat lo = parse_rat(tok.substr(1, comma - 1));
        Rat hi = parse_rat(tok.substr(comma + 1, tok.size() - comma - 2));
        return RatInterval(lo, hi);
    }
    Rat v = parse_rat(tok);
    return RatInterval::point(v);
}

}  // namespace

Constraint parse_constraint_line(const std::string& line) {
    std::istringstream in(line);
    std::string kind;
    in >> kind;
    Constraint c;
    c.src = line;
    auto read_expr = [&]() {
        std::string tok;
        in >> tok;
        return flatten_expr(parse_knot_expr(tok));
    };
    if (kind == "value") {
        c.kind = Constraint::Kind::Value;
        in >> c.invariant;
        c.e1 = read_expr();
        std::string op, rest;
        in >> op;
        std::getline(in, rest);
        if (op != "=" && op != "in")
            throw std::invalid_argument("expected '=' or 'in' in: " + line);
        c.payload = parse_interval(rest);
    } else if (kind == "xchg") {
        c.kind = Constraint::Kind::CrossingChange;
        in >> c.invariant;
        c.e1 = read_expr();
        c.e2 = read_expr();
        if (!(in >> c.count)) c.count = 1;
    } else if (kind == "cobordism") {
        c.kind = Constraint::Kind::Cobordism;
        in >> c.invariant;
        c.e1 = read_expr();
        c.e2 = read_expr();
        std::string tok;
        in >> tok;
        if (tok == "chi") in >> tok;
        c.chi = parse_rat(tok);
    } else if (kind == "bennequin") {
        c.kind = Constraint::Kind::Bennequin;
        in >> c.invariant;
        c.e1 = read_expr();
        std::string rest;
        std::getline(in, rest);
        c.payload = parse_interval(rest);
    } else if (kind == "lattice") {
        c.kind = Constraint::Kind::Lattice;
        in >> c.invariant;
        std::string tok;
        in >> tok;
        if (tok != "step") throw std::invalid_argument("expected 'step' in: " + line);
        in >> tok;
        c.step = parse_rat(tok);
        c.offset = 0;
        if (in >> tok) {
            if (tok != "offset")
                throw std::invalid_argument("expected 'offset' in: " + line);
            in >> tok;
            c.offset = parse_rat(tok);
        }
    } else if (kind == "slicegenus") {
        c.kind = Constraint::Kind::SliceGenus;
        in >> c.invariant;
        c.e1 = read_expr();
        std::string tok;
        in >> tok;
        c.genus = parse_rat(tok);
    } else if (kind == "alternating") {
        c.kind = Constraint::Kind::Alternating;
        c.e1 = read_expr();
        in >> c.sigma;
    } else if (kind == "quasialt") {
        c.kind = Constraint::Kind::QuasiAlternating;
        c.e1 = read_expr();
        in >> c.sigma;
    } else {
        throw std::invalid_argument("unknown constraint kind '" + kind + "'");
    }
    return c;
}

std::vector<Constraint> parse_constraints(const std::string& text) {
    std::vector<Constraint> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace((unsigned char)ch)) blank = false;
        if (blank) continue;
        out.push_back(parse_constraint_line(line));
    }
    return out;
}

}  // namespace knotlib
