// Exact multivariate Laurent polynomial arithmetic over the integers in the
// variables t, q, a, r. Homological t-exponents may be half-integral, so they
// are stored doubled (t2 = 1 means t^(1/2)). Coefficients are arbitrary
// precision.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "knotlib/rational.hpp"

namespace knotlib {

struct Monomial {
    int t2 = 0;  // doubled t-exponent
    int q = 0;
    int a = 0;
    int r = 0;

    // Lexicographic on (t2, q, a, r); this order is used everywhere a
    // deterministic iteration or least-term argument is needed.
    auto operator<=>(const Monomial&) const = default;

    Monomial inverse() const { return {-t2, -q, -a, -r}; }
    Monomial operator*(const Monomial& o) const {
        return {t2 + o.t2, q + o.q, a + o.a, r + o.r};
    }
    bool is_one() const { return t2 == 0 && q == 0 && a == 0 && r == 0; }
};

inline Monomial mono_t2(int t2) { return {t2, 0, 0, 0}; }
inline Monomial mono_q(int q) { return {0, q, 0, 0}; }
inline Monomial mono_a(int a) { return {0, 0, a, 0}; }
inline Monomial mono_r(int r) { return {0, 0, 0, r}; }
inline Monomial mono(int t2, int q, int a, int r = 0) { return {t2, q, a, r}; }

class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(long c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    LaurentPoly(const Int& c, const Monomial& m) {
        if (c != 0) terms_[m] = c;
    }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }
    static LaurentPoly from_mono(const Monomial& m) { return LaurentPoly(1, m); }

    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    bool operator==(const LaurentPoly&) const = default;

    Int coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Monomial& m, const Int& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly shifted(const Monomial& m) const;  // multiply by a monomial
    LaurentPoly scaled(const Int& c) const;

    bool nonnegative() const;
    bool has_r() const;
    bool has_t() const;
    bool has_a() const;
    bool t2_all_even() const;

    // Sum of all coefficients (the dimension of a graded vector space whose
    // graded dimension this polynomial is).
    Int total() const;

    // t^i q^j a^l -> t^i q^(j+N*l); requires r-free input.
    LaurentPoly substitute_a(int N) const;
    // r -> 1
    LaurentPoly substitute_r_one() const;
    // t -> -1; requires integral t-exponents (even t2) and r-free input.
    LaurentPoly evaluate_t_minus_one() const;

    // All exponents negated.
    LaurentPoly dual() const;

    // Terms with the given doubled t-exponent, t-factor removed.
    LaurentPoly t_component(int i2) const;
    int min_t2() const;  // on nonzero polynomials
    int max_t2() const;
    std::pair<int, int> q_range() const;  // min/max q exponent, {0,0} if zero

    // delta(t^i q^j a^k) = 2i + j + 2k over all monomials; requires even t2
    // and r-free input.
    std::set<int> delta_degrees() const;

    std::string str() const;

  private:
    std::map<Monomial, Int> terms_;  // no zero coefficients stored
};

// [N]_x = x^(1-N) + x^(3-N) + ... + x^(N-1), where x is q or the product qr.
enum class QVar { q, qr };
LaurentPoly quantum_int(int N, QVar var = QVar::q);

// A <= B iff B - A has nonnegative coefficients.
bool leq(const LaurentPoly& p, const LaurentPoly& s);

// The unique f >= 0 with (1 + m) * f = p, if it exists. m must not be the
// identity monomial. Failure (no such f) is a normal outcome.
std::optional<LaurentPoly> exact_div_by_one_plus(const LaurentPoly& p,
                                                 const Monomial& m);

}  // namespace knotlib
