#include "knotlib/bounds.hpp"

#include <sstream>
#include <stdexcept>

namespace knotlib {

XnSet xn_set(const HomologyTable& h, int N) {
    return xn_set(BoundTable(h), N);
}

XnSet xn_set(const BoundTable& h, int N) {
    if (N < 2) throw std::domain_error("xn_set: N must be >= 2");
    if (!h.table().is_knot_table())
        throw std::domain_error("xn_set: knot table required");
    LaurentPoly deg0 = h.table().dims().t_component(0);
    if (deg0.is_zero())
        throw std::domain_error("xn_set: empty degree-0 part; inconsistent table");
    XnSet x;
    x.is_upper_bound_source = h.upper_bound();
    for (const auto& [m, c] : deg0.terms()) {
        long v = m.q + static_cast<long>(N) * m.a;
        if (v % 2 != 0)
            throw std::domain_error("xn_set: odd generator degree " + std::to_string(v));
        x.values.insert(v);
    }
    return x;
}

RatInterval sn_interval(const XnSet& x, int N) {
    if (x.values.empty()) throw std::domain_error("sn_interval: empty X set");
    long mx = *x.values.rbegin(), mn = *x.values.begin();
    Rat lo = rat(mx) / rat(1 - N);
    Rat hi = rat(mn) / rat(1 - N);
    return RatInterval(lo, hi).with_lattice(rat(2, N - 1));
}

BoundTable les_bound_plus(const BoundTable& h_minus, const HomologyTable& l0_rr) {
    LaurentPoly out = h_minus.table().dims().shifted(mono(4, 0, -2)) +
                      l0_rr.dims().shifted(mono(1, 0, -1));
    return BoundTable(HomologyTable(out), true);
}

BoundTable les_bound_minus(const BoundTable& h_plus, const HomologyTable& l0_rr) {
    LaurentPoly out = h_plus.table().dims().shifted(mono(-4, 0, 2)) +
                      l0_rr.dims().shifted(mono(-1, 0, 1));
    return BoundTable(HomologyTable(out), true);
}

int q_span(const LaurentPoly& a_spec, const LaurentPoly& b_spec) {
    auto [alo, ahi] = a_spec.q_range();
    auto [blo, bhi] = b_spec.q_range();
    return std::max(ahi, bhi) - std::min(alo, blo);
}

bool lift_stable(const LaurentPoly&, const LaurentPoly&, int N, int span) {
    return std::abs(N) > span;
}

std::string bounds_json(const XnSet& x, int N) {
    RatInterval iv = sn_interval(x, N);
    std::ostringstream os;
    os << "{\"N\": " << N << ", \"xn\": [";
    bool first = true;
    for (long v : x.values) {
        if (!first) os << ", ";
        os << v;
        first = false;
    }
    os << "], \"s_lo\": \"" << rat_str(iv.lo()) << "\", \"s_hi\": \""
       << rat_str(iv.hi()) << "\", \"lattice_step\": \""
       << rat_str(iv.lattice()->step) << "\", \"candidates\": [";
    first = true;
    for (const Rat& c : iv.candidates()) {
        if (!first) os << ", ";
        os << '"' << rat_str(c) << '"';
        first = false;
    }
    os << "], \"upper_bound_source\": " << (x.is_upper_bound_source ? "true" : "false")
       << "}";
    return os.str();
}

}  // namespace knotlib
