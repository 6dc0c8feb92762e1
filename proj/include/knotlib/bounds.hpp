// Extraction of the degree-0 generator set X_N from a homology table, the
// induced two-sided bounds on the concordance invariants s_N, and the skein
// long-exact-sequence bound operators.

#pragma once

#include <set>
#include <string>

#include "knotlib/homology.hpp"
#include "knotlib/rational.hpp"

namespace knotlib {

struct XnSet {
    std::set<long> values;  // alpha + N*beta over degree-0 generators
    bool is_upper_bound_source = false;
};

// These tables may be genuine homology or termwise upper bounds; the flag
// propagates, and the induced intervals remain valid supersets either way.
class BoundTable {
  public:
    BoundTable(HomologyTable t, bool upper_bound)
        : table_(std::move(t)), upper_bound_(upper_bound) {}
    explicit BoundTable(HomologyTable t) : table_(std::move(t)) {}
    const HomologyTable& table() const { return table_; }
    bool upper_bound() const { return upper_bound_; }

  private:
    HomologyTable table_;
    bool upper_bound_ = false;
};

XnSet xn_set(const BoundTable& h, int N);
XnSet xn_set(const HomologyTable& h, int N);

// [max X / (1-N), min X / (1-N)], carrying the lattice (2/(N-1)) Z.
RatInterval sn_interval(const XnSet& x, int N);

// Upper bound for the table of the switched-positive knot:
//   t^2 a^-2 * K_minus + t^(1/2) a^-1 * L0_rr
BoundTable les_bound_plus(const BoundTable& h_minus, const HomologyTable& l0_rr);
// and its mirror-symmetric partner:
//   t^-2 a^2 * K_plus + t^(-1/2) a * L0_rr
BoundTable les_bound_minus(const BoundTable& h_plus, const HomologyTable& l0_rr);

// Certifies that comparing two (q,a) polynomials after the substitution
// a -> q^N decides the bivariate comparison: true iff |N| exceeds the
// q-exponent spread of the two polynomials.
bool lift_stable(const LaurentPoly& a_spec, const LaurentPoly& b_spec, int N,
                 int span);
int q_span(const LaurentPoly& a_spec, const LaurentPoly& b_spec);

std::string bounds_json(const XnSet& x, int N);

}  // namespace knotlib
