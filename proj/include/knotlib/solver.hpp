// Interval constraint propagation over the slice-torus axioms: values,
// crossing changes, cobordisms, Bennequin bounds, lattices and slice-genus
// bounds, over formal connected sums and mirrors of named knots. Also the
// convex-hull certificates that separate one concordance invariant from a
// family of others.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotlib/knotspec.hpp"
#include "knotlib/rational.hpp"

namespace knotlib {

// A formal connected sum of atoms and mirrored atoms, stored flattened and
// order-normalised: atom name -> multiplicity (negative for mirrors).
using KnotExpr = std::map<std::string, int>;

std::string expr_str(const KnotExpr& e);

struct Constraint {
    enum class Kind {
        Value,           // invariant(e1) in payload
        CrossingChange,  // 0 <= v(e1) - v(e2) <= 2*count
        Cobordism,       // |v(e1) - v(e2)| <= -chi
        Bennequin,       // v(e1) in payload
        Lattice,         // invariant valued in step*Z + offset
        SliceGenus,      // v(e1) <= 2*genus
        Alternating,     // e1 is an alternating atom with signature sigma:
                         // every slice-torus invariant equals sigma on it
        QuasiAlternating // as above, but only for s_2 and 2tau
    };
    Kind kind;
    std::string invariant;  // Value and Lattice apply to this name only
    KnotExpr e1, e2;
    RatInterval payload;
    Rat step, offset;
    long count = 1;
    Rat chi;
    Rat genus;
    long sigma = 0;
    std::string src;  // original line, for contradiction reports
};

struct Assignment {
    // atom -> interval for one invariant; atoms missing here are unbounded
    std::map<std::string, RatInterval> intervals;

    const RatInterval& at(const std::string& atom) const;
    bool has(const std::string& atom) const { return intervals.count(atom) > 0; }
};

class contradiction_error : public std::runtime_error {
  public:
    explicit contradiction_error(const std::string& what) : std::runtime_error(what) {}
};

// Least-fixpoint narrowing for one invariant name. Throws
// contradiction_error naming the offending constraint when a set is
// inconsistent.
Assignment propagate(const std::vector<Constraint>& constraints,
                     const std::string& invariant,
                     std::optional<Lattice> lattice = std::nullopt);

// Interval arithmetic along the expression: sums add, mirrors negate.
RatInterval eval_expr(const KnotExpr& e, const Assignment& assignment);

struct IndependenceCertificate {
    std::string witness;
    RatInterval hull;          // achievable values of convex combinations
    RatInterval target_value;  // the target invariant on the witness
    std::string note;
    std::string json() const;
};

// values: per family-member invariant name, an assignment giving its value
// set on the witness knots. A certificate is a witness where the convex
// hull of the family values excludes every admissible target value.
std::optional<IndependenceCertificate> certify_independence(
    const std::vector<std::string>& family,
    const std::map<std::string, Assignment>& values,
    const std::string& target, const Assignment& target_values,
    const std::vector<std::string>& witnesses, const std::string& tail_note = "");

// Line-oriented constraint files; see parse_constraint_line for the grammar.
std::vector<Constraint> parse_constraints(const std::string& text);
Constraint parse_constraint_line(const std::string& line);

}  // namespace knotlib
