#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotlib/knotspec.hpp"
#include "knotlib/skein.hpp"

using namespace knotlib;

TEST_CASE("expression parsing") {
    ExprNode e = parse_knot_expr("P(5,-3,2) # -T(3,2)");
    REQUIRE(e.kind == ExprNode::Kind::Sum);
    REQUIRE(e.children.size() == 2);
    CHECK(e.children[0].kind == ExprNode::Kind::Atom);
    CHECK(e.children[0].name == "P(5,-3,2)");
    CHECK(e.children[1].kind == ExprNode::Kind::Mirror);
    CHECK(e.children[1].children[0].name == "T(3,2)");

    CHECK(parse_knot_expr("B[1,1,1]@2").name == "B[1,1,1]@2");
    CHECK_THROWS_AS(parse_knot_expr("P(5,-3)#"), parse_error);
    CHECK_THROWS_AS(parse_knot_expr(""), parse_error);

    auto flat = flatten_expr(parse_knot_expr("A # A # -B # -(A # C)"));
    CHECK(flat == std::map<std::string, int>{{"A", 1}, {"B", -1}, {"C", -1}});
    CHECK(flatten_expr(parse_knot_expr("-(-A)")) == std::map<std::string, int>{{"A", 1}});
}

TEST_CASE("print and parse round trip") {
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> n_atoms(1, 4), coin(0, 1), which(0, 2);
    const char* names[] = {"T(3,2)", "P(5,-3,2)", "8_9"};
    for (int trial = 0; trial < 50; ++trial) {
        std::map<std::string, int> flat;
        int k = n_atoms(rng);
        for (int i = 0; i < k; ++i) {
            flat[names[which(rng)]] += coin(rng) ? 1 : -1;
        }
        std::erase_if(flat, [](const auto& kv) { return kv.second == 0; });
        if (flat.empty()) continue;
        ExprNode e = expr_from_flat(flat);
        CHECK(flatten_expr(parse_knot_expr(print_expr(e))) == flat);
    }
}

TEST_CASE("atom resolution") {
    CHECK(resolve_atom("B[1,1,1]@2").crossing_count() == 3);
    CHECK(resolve_atom("T(3,2)").crossing_count() == 3);
    CHECK(resolve_atom("T(2,3)").crossing_count() == 3);
    CHECK(resolve_atom("T(1,5)").crossing_count() == 0);
    CHECK(resolve_atom("P(5,-3,2)").crossing_count() == 10);
    CHECK(resolve_atom("trefoil").crossing_count() == 3);
    CHECK(resolve_atom("unknot").components() == 1);
    CHECK_THROWS_WITH_AS(resolve_atom("no_such_knot", "/nonexistent"),
                         doctest::Contains("known names"), std::invalid_argument);
}

TEST_CASE("negative torus parameters give mirrors") {
    LaurentPoly p = homflypt(torus_diagram(3, 2));
    CHECK(homflypt(torus_diagram(-3, 2)) == p.dual());
    CHECK(homflypt(resolve_atom("T(-3,2)")) == p.dual());
}

TEST_CASE("pd literal parsing") {
    // positive trefoil as a PD literal (braid closure arcs)
    Diagram d = parse_pd("X(0,2,3,1), X(2,4,5,3), X(4,0,1,5)");
    CHECK(d.crossing_count() == 3);
    CHECK(d.is_knot());
    CHECK(d.writhe() == 3);
    CHECK(homflypt(d) == homflypt(Diagram::from_braid({1, 1, 1}, 2)));

    Diagram s = parse_pd("X+(0,2,3,1), X+(2,4,5,3), X+(4,0,1,5)");
    CHECK(s.writhe() == 3);

    CHECK_THROWS_AS(parse_pd("X(1,2,3)"), parse_error);
}

TEST_CASE("expression diagrams") {
    Diagram sum = resolve_expr(parse_knot_expr("T(3,2) # -T(3,2)"));
    CHECK(sum.crossing_count() == 6);
    CHECK(sum.is_knot());
    LaurentPoly p = homflypt(sum);
    LaurentPoly t = homflypt(torus_diagram(3, 2));
    CHECK(p == t * t.dual());
}
