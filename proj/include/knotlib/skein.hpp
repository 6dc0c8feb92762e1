// Skein-relation computation of the HOMFLYPT polynomial and its sl_N
// specialisations, plus an independent sl_2 state-sum oracle.
//
// The recursion switches or smooths the first crossing that the canonical
// base-point walk meets on its under-strand; descending diagrams are unlinks,
// which bounds the recursion. Results of homflypt are exact Laurent
// polynomials for knots; split factors (a - a^-1)/(q - q^-1) are tracked as
// an explicit denominator power while recursing.

#pragma once

#include <map>
#include <stdexcept>

#include "knotlib/diagram.hpp"
#include "knotlib/laurent.hpp"

namespace knotlib {

struct SkeinLimits {
    size_t max_crossings = 16;
    size_t max_depth = 4096;
};

class skein_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// value num / (q - q^-1)^denom_pow
struct SkeinValue {
    LaurentPoly num;
    int denom_pow = 0;

    SkeinValue reduce() const;
    SkeinValue operator+(const SkeinValue& o) const;
    SkeinValue operator*(const LaurentPoly& p) const;
    bool operator==(const SkeinValue& o) const;
};

// P_infty with value 1 on the unknot. Throws skein_error if the result is
// not a Laurent polynomial (possible for split links) or if limits are hit.
LaurentPoly homflypt(const Diagram& d, const SkeinLimits& lim = {});

// Raw HOMFLYPT value with its unlink denominator, defined for every link.
SkeinValue homflypt_value(const Diagram& d, const SkeinLimits& lim = {});

// P_N with value [N]_q on the unknot.
LaurentPoly sln_poly(const Diagram& d, int N, const SkeinLimits& lim = {});

// Unreduced sl_2 polynomial by Kauffman-bracket state sum over all
// resolutions; shares no code path with the skein recursion.
LaurentPoly kauffman_sl2(const Diagram& d, const SkeinLimits& lim = {});

}  // namespace knotlib
