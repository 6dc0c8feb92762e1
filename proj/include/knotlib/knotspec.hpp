// Knot-expression grammar and resolution of atoms to diagrams.
//
//   atom := NAME | T(p,q) | P(a,b,c) | B[w1,w2,...]@n | X...(PD literal)
//   expr := atom | '-' expr | expr '#' expr
//
// PD literals are comma-separated tuples X(a,b,c,d), optionally signed as
// X+(...) or X-(...).

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "knotlib/diagram.hpp"

namespace knotlib {

struct ExprNode {
    enum class Kind { Atom, Mirror, Sum };
    Kind kind = Kind::Atom;
    std::string name;                     // Atom
    std::vector<ExprNode> children;       // Mirror (1) or Sum (>= 2)
};

class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos(pos) {}
    size_t pos;
};

ExprNode parse_knot_expr(const std::string& text);
std::string print_expr(const ExprNode& e);

// Flatten and order-normalise: Mirror(Mirror(x)) = x, mirrors distribute
// over sums, atoms sorted. Result maps atom -> signed multiplicity.
std::map<std::string, int> flatten_expr(const ExprNode& e);

// Reverse of flatten_expr, in canonical printing order.
ExprNode expr_from_flat(const std::map<std::string, int>& flat);

// Resolve one atom to a diagram. Named knots are looked up as
// <data_dir>/pd/<name>.pd; constructors are built directly.
Diagram resolve_atom(const std::string& atom, const std::string& data_dir = "data");

// Diagram of a whole expression (connected sums splice diagrams, mirrors
// flip them).
Diagram resolve_expr(const ExprNode& e, const std::string& data_dir = "data");

// Connected sum of two diagrams by splicing one arc of each.
Diagram connected_sum_diagram(const Diagram& d1, const Diagram& d2);

// PD literal text -> diagram.
Diagram parse_pd(const std::string& text);

// Known bundled names, for error messages.
std::vector<std::string> known_names(const std::string& data_dir = "data");

// Standard positive torus-knot braid on min(p,q) strands.
Diagram torus_diagram(int p, int q);

}  // namespace knotlib
