#include "knotlib/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace knotlib {

void LaurentPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
    LaurentPoly out;
    for (const auto& [m1, c] : terms_) out.terms_.emplace(m1 * m, c);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [m, c1] : terms_) out.terms_.emplace(m, c1 * c);
    return out;
}

bool LaurentPoly::nonnegative() const {
    for (const auto& [m, c] : terms_)
        if (c < 0) return false;
    return true;
}

bool LaurentPoly::has_r() const {
    for (const auto& [m, c] : terms_)
        if (m.r != 0) return true;
    return false;
}

bool LaurentPoly::has_t() const {
    for (const auto& [m, c] : terms_)
        if (m.t2 != 0) return true;
    return false;
}

bool LaurentPoly::has_a() const {
    for (const auto& [m, c] : terms_)
        if (m.a != 0) return true;
    return false;
}

bool LaurentPoly::t2_all_even() const {
    for (const auto& [m, c] : terms_)
        if (m.t2 % 2 != 0) return false;
    return true;
}

Int LaurentPoly::total() const {
    Int s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

LaurentPoly LaurentPoly::substitute_a(int N) const {
    if (has_r()) throw std::domain_error("substitute_a: nonzero r-exponent present");
    LaurentPoly out;
    for (const auto& [m, c] : terms_)
        out.add_term(Monomial{m.t2, m.q + N * m.a, 0, 0}, c);
    return out;
}

LaurentPoly LaurentPoly::substitute_r_one() const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_)
        out.add_term(Monomial{m.t2, m.q, m.a, 0}, c);
    return out;
}

LaurentPoly LaurentPoly::evaluate_t_minus_one() const {
    if (has_r()) throw std::domain_error("evaluate_t_minus_one: nonzero r-exponent");
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.t2 % 2 != 0)
            throw std::domain_error("evaluate_t_minus_one: half-integer t-exponent");
        int i = m.t2 / 2;
        out.add_term(Monomial{0, m.q, m.a, 0}, (i % 2 == 0) ? c : -c);
    }
    return out;
}

LaurentPoly LaurentPoly::dual() const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.inverse(), c);
    return out;
}

LaurentPoly LaurentPoly::t_component(int i2) const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_)
        if (m.t2 == i2) out.terms_.emplace(Monomial{0, m.q, m.a, m.r}, c);
    return out;
}

int LaurentPoly::min_t2() const {
    if (terms_.empty()) throw std::domain_error("min_t2 on zero polynomial");
    return terms_.begin()->first.t2;
}

int LaurentPoly::max_t2() const {
    if (terms_.empty()) throw std::domain_error("max_t2 on zero polynomial");
    return terms_.rbegin()->first.t2;
}

std::pair<int, int> LaurentPoly::q_range() const {
    if (terms_.empty()) return {0, 0};
    int lo = terms_.begin()->first.q, hi = lo;
    for (const auto& [m, c] : terms_) {
        lo = std::min(lo, m.q);
        hi = std::max(hi, m.q);
    }
    return {lo, hi};
}

std::set<int> LaurentPoly::delta_degrees() const {
    std::set<int> out;
    for (const auto& [m, c] : terms_) {
        if (m.r != 0) throw std::domain_error("delta_degrees: nonzero r-exponent");
        if (m.t2 % 2 != 0)
            throw std::domain_error("delta_degrees: half-integer t-exponent");
        out.insert(m.t2 + m.q + 2 * m.a);  // 2i + j + 2k with t2 = 2i
    }
    return out;
}

namespace {

void append_var(std::ostringstream& os, const char* name, int num, int den) {
    os << ' ' << name << '^';
    if (den == 1) {
        os << num;
    } else if (num % den == 0) {
        os << num / den;
    } else {
        os << num << '/' << den;
    }
}

}  // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    // Print in descending (t2, a, q, r) order: t-groups ascending would match
    // the usual table layout, but leading terms first reads better on a line.
    std::vector<std::pair<Monomial, Int>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
        const Monomial &p = x.first, &s = y.first;
        if (p.t2 != s.t2) return p.t2 < s.t2;
        if (p.a != s.a) return p.a > s.a;
        if (p.q != s.q) return p.q > s.q;
        return p.r > s.r;
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : v) {
        Int ac = abs(c);
        if (first) {
            if (c < 0) out += '-';
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ");
        }
        std::ostringstream os;
        if (m.t2 != 0) append_var(os, "t", m.t2, 2);
        if (m.a != 0) append_var(os, "a", m.a, 1);
        if (m.q != 0) append_var(os, "q", m.q, 1);
        if (m.r != 0) append_var(os, "r", m.r, 1);
        std::string vars = os.str();
        if (!vars.empty() && vars.front() == ' ') vars.erase(0, 1);
        if (ac != 1 || vars.empty()) {
            out += ac.get_str();
            if (!vars.empty()) out += ' ';
        }
        out += vars;
    }
    return out;
}

LaurentPoly quantum_int(int N, QVar var) {
    if (N < 1) throw std::domain_error("quantum_int: N must be >= 1");
    LaurentPoly out;
    for (int e = 1 - N; e <= N - 1; e += 2)
        out.add_term(var == QVar::q ? mono_q(e) : mono(0, e, 0, e), 1);
    return out;
}

bool leq(const LaurentPoly& p, const LaurentPoly& s) {
    return (s - p).nonnegative();
}

std::optional<LaurentPoly> exact_div_by_one_plus(const LaurentPoly& p,
                                                 const Monomial& m) {
    if (m.is_one()) throw std::domain_error("exact_div_by_one_plus: m is the identity");
    // Reduce to the case m > 1 in the monomial order, via
    // (1 + m) f = p  <=>  (1 + m^-1) f = m^-1 p.
    if (m < Monomial{}) return exact_div_by_one_plus(p.shifted(m.inverse()), m.inverse());
    if (p.is_zero()) return LaurentPoly::zero();

    // With m > 1 the least monomial of (1+m)f is the least monomial of f and
    // the coefficients agree, so peel least terms. Each step lowers the sum
    // of coefficients by twice a positive amount, so this terminates.
    LaurentPoly rem = p, f;
    while (!rem.is_zero()) {
        auto [u, c] = *rem.terms().begin();
        if (c < 0) return std::nullopt;
        f.add_term(u, c);
        rem.add_term(u, -c);
        rem.add_term(u * m, -c);
    }
    return f;
}

}  // namespace knotlib
