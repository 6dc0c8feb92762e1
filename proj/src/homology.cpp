#include "knotlib/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace knotlib {

HomologyTable::HomologyTable(LaurentPoly dims) : dims_(std::move(dims)) {
    if (!dims_.nonnegative())
        throw std::domain_error("homology table with negative coefficient");
}

std::string HomologyTable::grid() const {
    if (dims_.is_zero()) return "(empty)\n";
    std::set<int> qs, t2s;
    bool halves = !dims_.t2_all_even();
    for (const auto& [m, c] : dims_.terms()) {
        if (m.r != 0 || m.a != 0)
            throw std::domain_error("grid rendering requires a table in t and q only");
        qs.insert(m.q);
        t2s.insert(m.t2);
    }
    std::ostringstream os;
    auto t_label = [&](int t2) {
        if (!halves) return std::to_string(t2 / 2);
        return std::to_string(t2) + "/2";
    };
    os << "q\\t";
    for (int t2 : t2s) os << '\t' << t_label(t2);
    os << '\n';
    for (auto it = qs.rbegin(); it != qs.rend(); ++it) {
        os << *it;
        for (int t2 : t2s) {
            Int c = dims_.coeff(Monomial{t2, *it, 0, 0});
            os << '\t';
            if (c != 0) os << c.get_str();
        }
        os << '\n';
    }
    return os.str();
}

HomologyTable kr_thin(const LaurentPoly& p_inf, int sigma) {
    if (p_inf.has_t() || p_inf.has_r())
        throw std::domain_error("kr_thin: input must be a polynomial in q and a");
    if (sigma % 2 != 0) throw std::domain_error("kr_thin: odd signature");
    LaurentPoly dims;
    for (const auto& [m, c] : p_inf.terms()) {
        int num = -sigma - m.q - 2 * m.a;
        if (num % 2 != 0)
            throw std::domain_error("kr_thin: non-integral homological degree; "
                                    "not thin with this signature");
        int i = num / 2;
        bool even = (i % 2 == 0);
        if ((c > 0) != even)
            throw std::domain_error("kr_thin: coefficient sign mismatch; "
                                    "not thin with this signature");
        dims.add_term(Monomial{2 * i, m.q, m.a, 0}, abs(c));
    }
    return HomologyTable(dims);
}

HomologyTable torus_t2(int ell) {
    if (ell < 3 || ell % 2 == 0)
        throw std::domain_error("torus_t2: ell must be odd and >= 3");
    LaurentPoly geom;
    for (int j = 0; j <= (ell - 3) / 2; ++j)
        geom.add_term(mono(4 * j, -4 * j, 0), 1);
    LaurentPoly step;
    step.add_term(mono(4, -4, 0), 1);   // t^2 q^-4
    step.add_term(mono(6, -2, -2), 1);  // t^3 a^-2 q^-2
    LaurentPoly inner = LaurentPoly::one() + step * geom;
    return HomologyTable(inner.shifted(mono(0, ell - 1, 1 - ell)));
}

HomologyTable connected_sum(const HomologyTable& h1, const HomologyTable& h2) {
    if (!h1.is_knot_table() || !h2.is_knot_table())
        throw std::domain_error("connected_sum: knot tables required");
    return HomologyTable(h1.dims() * h2.dims());
}

HomologyTable mirror_table(const HomologyTable& h) {
    return HomologyTable(h.dims().dual());
}

HomologyTable hopf_rr() {
    LaurentPoly p;
    p.add_term(mono(-1, 2, -1), 1);  // t^-1/2 a^-1 q^2
    p.add_term(mono(1, 0, -1), 1);   // t^1/2 a^-1
    p.add_term(mono(3, -2, -1), 1);  // t^3/2 a^-1 q^-2
    p.add_term(mono(5, 0, -3), 1);   // t^5/2 a^-3
    return HomologyTable(p);
}

HomologyTable pretzel_5m3_2_published() {
    LaurentPoly p;
    p.add_term(mono(-6, 4, 2), 1);
    p.add_term(mono(-4, 6, 0), 1);
    p.add_term(mono(-2, 0, 2), 1);
    p.add_term(mono(0, 2, 0), 2);
    p.add_term(mono(0, 0, 0), 1);
    p.add_term(mono(2, 4, -2), 1);
    p.add_term(mono(2, -4, 2), 1);
    p.add_term(mono(4, -2, 0), 2);
    p.add_term(mono(6, 0, -2), 1);
    p.add_term(mono(8, -6, 0), 1);
    p.add_term(mono(10, -4, -2), 1);
    return HomologyTable(p);
}

bool is_thin(const HomologyTable& h, int sigma) {
    if (!h.is_knot_table()) throw std::domain_error("is_thin: knot table required");
    auto deltas = h.dims().delta_degrees();
    return deltas.size() == 1 && *deltas.begin() == -sigma;
}

}  // namespace knotlib
