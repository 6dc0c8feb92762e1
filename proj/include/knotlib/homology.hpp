// Reduced HOMFLYPT homology tables: graded dimensions in t, q, a with
// nonnegative coefficients. Thin knots are reconstructed from the polynomial
// and the signature; the (l,2) torus series has a closed form.

#pragma once

#include <string>

#include "knotlib/laurent.hpp"

namespace knotlib {

class HomologyTable {
  public:
    HomologyTable() = default;
    explicit HomologyTable(LaurentPoly dims);

    const LaurentPoly& dims() const { return dims_; }
    bool is_knot_table() const { return dims_.t2_all_even(); }
    Int total_dim() const { return dims_.total(); }
    bool operator==(const HomologyTable&) const = default;

    // Rendered as a grid, q-degrees as rows (descending), t-degrees as
    // columns.
    std::string grid() const;

  private:
    LaurentPoly dims_;
};

// Table of a thin knot from its polynomial and signature: the monomial
// c q^j a^k sits in homological degree i = (-sigma - j - 2k)/2 with
// dimension |c|. Throws if the degree is not integral or the sign of c is
// not (-1)^i; either failure means no thin knot has this polynomial and
// signature.
HomologyTable kr_thin(const LaurentPoly& p_inf, int sigma);

// Closed form for the (ell,2) torus knot, odd ell >= 3:
// a^(1-ell) q^(ell-1) (1 + (t^2 q^-4 + t^3 a^-2 q^-2) * sum_{j<=(ell-3)/2} (t^2 q^-4)^j)
HomologyTable torus_t2(int ell);

HomologyTable connected_sum(const HomologyTable& h1, const HomologyTable& h2);

HomologyTable mirror_table(const HomologyTable& h);

// Totally reduced homology of the positive Hopf link (fixed table).
HomologyTable hopf_rr();

// Reduced table of the (5,-3,2) pretzel knot as published from external
// homology programs. Follows the mirrored grading convention of that source;
// input data for the decomposition checker only.
HomologyTable pretzel_5m3_2_published();

bool is_thin(const HomologyTable& h, int sigma);

}  // namespace knotlib
