#include "knotlib/skein.hpp"

#include <numeric>
#include <optional>

namespace knotlib {

namespace {

LaurentPoly z_poly() {  // q - q^-1
    LaurentPoly z;
    z.add_term(mono_q(1), 1);
    z.add_term(mono_q(-1), -1);
    return z;
}

LaurentPoly a_minus_ainv() {
    LaurentPoly p;
    p.add_term(mono_a(1), 1);
    p.add_term(mono_a(-1), -1);
    return p;
}

// exact division by (q - q^-1); nullopt if not divisible
std::optional<LaurentPoly> divide_z(const LaurentPoly& p) {
    // slice by the non-q part of the monomial
    std::map<Monomial, std::map<int, Int>> slices;
    for (const auto& [m, c] : p.terms())
        slices[Monomial{m.t2, 0, m.a, m.r}][m.q] = c;
    LaurentPoly out;
    for (auto& [base, slice] : slices) {
        Int at1 = 0, at_minus1 = 0;
        for (const auto& [e, c] : slice) {
            at1 += c;
            at_minus1 += (e % 2 == 0) ? c : -c;
        }
        if (at1 != 0 || at_minus1 != 0) return std::nullopt;
        while (!slice.empty()) {
            auto it = std::prev(slice.end());
            int k = it->first;
            Int c = it->second;
            slice.erase(it);
            out.add_term(Monomial{base.t2, k - 1, base.a, base.r}, c);
            auto& lower = slice[k - 2];
            lower += c;
            if (lower == 0) slice.erase(k - 2);
        }
    }
    return out;
}

}  // namespace

SkeinValue SkeinValue::reduce() const {
    SkeinValue v = *this;
    while (v.denom_pow > 0) {
        auto q = divide_z(v.num);
        if (!q) break;
        v.num = *q;
        --v.denom_pow;
    }
    return v;
}

SkeinValue SkeinValue::operator+(const SkeinValue& o) const {
    SkeinValue a = *this, b = o;
    while (a.denom_pow < b.denom_pow) {
        a.num *= z_poly();
        ++a.denom_pow;
    }
    while (b.denom_pow < a.denom_pow) {
        b.num *= z_poly();
        ++b.denom_pow;
    }
    return SkeinValue{a.num + b.num, a.denom_pow};
}

SkeinValue SkeinValue::operator*(const LaurentPoly& p) const {
    return SkeinValue{num * p, denom_pow};
}

bool SkeinValue::operator==(const SkeinValue& o) const {
    SkeinValue a = reduce(), b = o.reduce();
    if (a.denom_pow == b.denom_pow) return a.num == b.num;
    // compare after clearing denominators
    while (a.denom_pow < b.denom_pow) {
        a.num *= z_poly();
        ++a.denom_pow;
    }
    while (b.denom_pow < a.denom_pow) {
        b.num *= z_poly();
        ++b.denom_pow;
    }
    return a.num == b.num;
}

namespace {

// First crossing that the base-point walk reaches on its under-strand, or
// nullopt when the diagram is descending.
std::optional<size_t> first_bad_crossing(const Diagram& d) {
    std::map<int, std::pair<size_t, int>> incoming;  // arc -> (crossing, slot)
    for (size_t i = 0; i < d.crossing_count(); ++i) {
        const auto& c = d.crossings()[i];
        incoming[c.arc[0]] = {i, 0};
        int over_in = c.sign > 0 ? 3 : 1;
        incoming[c.arc[over_in]] = {i, over_in};
    }
    std::vector<bool> visited(d.crossing_count(), false);
    for (const auto& cycle : d.component_cycles())
        for (int arc : cycle) {
            auto [ci, slot] = incoming.at(arc);
            if (visited[ci]) continue;
            visited[ci] = true;
            if (slot == 0) return ci;
        }
    return std::nullopt;
}

// Generic skein recursion. Rule supplies the two branch multipliers and the
// unlink base value.
template <typename Value, typename Rule>
Value skein_recurse(const Diagram& d, const Rule& rule,
                    std::map<std::vector<int>, Value>& memo,
                    const SkeinLimits& lim, size_t depth) {
    if (depth > lim.max_depth) throw skein_error("recursion depth limit exceeded");
    auto key = d.canonical_key();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    Value out;
    auto bad = first_bad_crossing(d);
    if (!bad) {
        out = rule.unlink(d.components());
    } else {
        int sign = d.crossings()[*bad].sign;
        Value sw = skein_recurse(d.switch_crossing(*bad), rule, memo, lim, depth + 1);
        Value sm = skein_recurse(d.smooth_crossing(*bad), rule, memo, lim, depth + 1);
        out = rule.combine(sign, sw, sm);
    }
    memo.emplace(std::move(key), out);
    return out;
}

struct HomflyRule {
    LaurentPoly z = z_poly();
    SkeinValue unlink(int comps) const {
        SkeinValue v{LaurentPoly::one(), 0};
        for (int i = 1; i < comps; ++i) {
            v.num *= a_minus_ainv();
            ++v.denom_pow;
        }
        return v;
    }
    SkeinValue combine(int sign, const SkeinValue& sw, const SkeinValue& sm) const {
        if (sign > 0)
            return sw * LaurentPoly(1, mono_a(-2)) + sm * (z.shifted(mono_a(-1)));
        return sw * LaurentPoly(1, mono_a(2)) + sm * (-z.shifted(mono_a(1)));
    }
};

struct SlnRule {
    int N;
    LaurentPoly z = z_poly();
    LaurentPoly unlink(int comps) const {
        LaurentPoly v = LaurentPoly::one();
        LaurentPoly qn = quantum_int(N, QVar::q);
        for (int i = 0; i < comps; ++i) v *= qn;
        return v;
    }
    LaurentPoly combine(int sign, const LaurentPoly& sw, const LaurentPoly& sm) const {
        if (sign > 0)
            return sw.shifted(mono_q(-2 * N)) + sm * z.shifted(mono_q(-N));
        return sw.shifted(mono_q(2 * N)) - sm * z.shifted(mono_q(N));
    }
};

void check_limits(const Diagram& d, const SkeinLimits& lim) {
    if (d.crossing_count() > lim.max_crossings)
        throw skein_error("crossing limit exceeded (" +
                          std::to_string(d.crossing_count()) + " > " +
                          std::to_string(lim.max_crossings) + ")");
}

}  // namespace

SkeinValue homflypt_value(const Diagram& d, const SkeinLimits& lim) {
    check_limits(d, lim);
    std::map<std::vector<int>, SkeinValue> memo;
    return skein_recurse(d, HomflyRule{}, memo, lim, 0).reduce();
}

LaurentPoly homflypt(const Diagram& d, const SkeinLimits& lim) {
    SkeinValue v = homflypt_value(d, lim);
    if (v.denom_pow != 0)
        throw skein_error("HOMFLYPT value of this link is not a Laurent polynomial");
    return v.num;
}

LaurentPoly sln_poly(const Diagram& d, int N, const SkeinLimits& lim) {
    if (N < 1) throw std::domain_error("sln_poly: N must be >= 1");
    check_limits(d, lim);
    std::map<std::vector<int>, LaurentPoly> memo;
    return skein_recurse(d, SlnRule{N}, memo, lim, 0);
}

LaurentPoly kauffman_sl2(const Diagram& d, const SkeinLimits& lim) {
    check_limits(d, lim);
    size_t n = d.crossing_count();
    int w = d.writhe();

    std::map<int, int> arc_ix;
    for (const auto& c : d.crossings())
        for (int s = 0; s < 4; ++s)
            if (!arc_ix.count(c.arc[s])) {
                int k = static_cast<int>(arc_ix.size());
                arc_ix[c.arc[s]] = k;
            }
    int narcs = static_cast<int>(arc_ix.size());

    LaurentPoly two = quantum_int(2, QVar::q);
    std::vector<LaurentPoly> two_pow(narcs + d.free_loops() + 2);
    two_pow[0] = LaurentPoly::one();
    for (size_t i = 1; i < two_pow.size(); ++i) two_pow[i] = two_pow[i - 1] * two;

    LaurentPoly out;
    for (size_t state = 0; state < (size_t(1) << n); ++state) {
        std::vector<int> parent(narcs ? narcs : 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int classes = narcs;
        auto unite = [&](int x, int y) {
            x = find(x);
            y = find(y);
            if (x != y) {
                parent[x] = y;
                --classes;
            }
        };
        int e = 0;
        for (size_t i = 0; i < n; ++i) {
            const auto& c = d.crossings()[i];
            bool smoothA = ((state >> i) & 1) == 0;
            e += smoothA ? 1 : -1;
            if (smoothA) {  // joins hugging corners (0,1) and (2,3)
                unite(arc_ix[c.arc[0]], arc_ix[c.arc[1]]);
                unite(arc_ix[c.arc[2]], arc_ix[c.arc[3]]);
            } else {
                unite(arc_ix[c.arc[0]], arc_ix[c.arc[3]]);
                unite(arc_ix[c.arc[1]], arc_ix[c.arc[2]]);
            }
        }
        int loops = (narcs ? classes : 0) + d.free_loops();
        // substitute A^2 = -q in (-A^3)^-w * A^e * [2]^loops
        int m = (e - 3 * w) / 2;
        bool neg = ((w + m) % 2) != 0;
        LaurentPoly term = two_pow[loops].shifted(mono_q(m));
        out += neg ? -term : term;
    }
    return out;
}

}  // namespace knotlib
