#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotlib/laurent.hpp"

using namespace knotlib;

namespace {

LaurentPoly P(std::initializer_list<std::pair<Monomial, long>> terms) {
    LaurentPoly p;
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

// table of the positive (3,2) torus knot: a^-2 q^2 + t^2 a^-2 q^-2 + t^3 a^-4
LaurentPoly trefoil_table() {
    return P({{mono(0, 2, -2), 1}, {mono(4, -2, -2), 1}, {mono(6, 0, -4), 1}});
}

LaurentPoly random_poly(std::mt19937& rng, bool nonneg = false, int max_terms = 6) {
    std::uniform_int_distribution<int> e(-3, 3), c(-4, 4), n(0, max_terms);
    LaurentPoly p;
    int terms = n(rng);
    for (int i = 0; i < terms; ++i) {
        long coeff = c(rng);
        if (nonneg) coeff = std::abs(coeff);
        p.add_term(mono(2 * e(rng), e(rng), e(rng), 0), coeff);
    }
    return p;
}

}  // namespace

TEST_CASE("multiplication basics") {
    LaurentPoly b = P({{mono_q(1), 1}, {mono_q(-1), 1}});
    CHECK(b * b == P({{mono_q(2), 1}, {mono_q(0), 2}, {mono_q(-2), 1}}));
    LaurentPoly p = P({{mono(2, 1, -1), 3}, {mono(0, 0, 2), -2}});
    CHECK(p * LaurentPoly::one() == p);
    CHECK(LaurentPoly(1, mono(0, 2, -2)) * LaurentPoly(1, mono(0, -2, 2)) ==
          LaurentPoly::one());
}

TEST_CASE("quantum integers") {
    CHECK(quantum_int(3, QVar::q) == P({{mono_q(-2), 1}, {mono_q(0), 1}, {mono_q(2), 1}}));
    CHECK(quantum_int(1, QVar::q) == LaurentPoly::one());
    CHECK(quantum_int(2, QVar::qr) ==
          P({{mono(0, -1, 0, -1), 1}, {mono(0, 1, 0, 1), 1}}));
    CHECK_THROWS_AS(quantum_int(0), std::domain_error);
}

TEST_CASE("substitute_a") {
    CHECK(LaurentPoly(1, mono(0, 2, -2)).substitute_a(2) == LaurentPoly(1, mono_q(-2)));
    CHECK(trefoil_table().substitute_a(3) ==
          P({{mono(0, -4, 0), 1}, {mono(4, -8, 0), 1}, {mono(6, -12, 0), 1}}));
    CHECK(LaurentPoly::one().substitute_a(7) == LaurentPoly::one());
    CHECK_THROWS_AS(LaurentPoly(1, mono(0, 0, 0, 1)).substitute_a(2), std::domain_error);
}

TEST_CASE("leq partial order") {
    LaurentPoly q2 = LaurentPoly(1, mono_q(2));
    LaurentPoly q2q = q2 + LaurentPoly(1, mono_q(1));
    CHECK(leq(q2, q2q));
    CHECK(!leq(q2q, q2));
    LaurentPoly lhs = P({{mono_q(-2), 3}, {mono(0, 0, 0), 1}});
    LaurentPoly rhs = lhs + LaurentPoly(1, mono(2, 0, -2));
    CHECK(leq(lhs, rhs));
}

TEST_CASE("dual") {
    CHECK(LaurentPoly(1, mono(0, 2, -2)).dual() == LaurentPoly(1, mono(0, -2, 2)));
    CHECK(trefoil_table().dual() ==
          P({{mono(0, -2, 2), 1}, {mono(-4, 2, 2), 1}, {mono(-6, 0, 4), 1}}));
    CHECK(LaurentPoly::one().dual() == LaurentPoly::one());
}

TEST_CASE("t_component") {
    CHECK(trefoil_table().t_component(0) == LaurentPoly(1, mono(0, 2, -2)));
    CHECK(trefoil_table().t_component(6) == LaurentPoly(1, mono(0, 0, -4)));
    CHECK(trefoil_table().t_component(2).is_zero());
}

TEST_CASE("delta degrees") {
    CHECK(trefoil_table().delta_degrees() == std::set<int>{-2});
    CHECK(P({{mono(0, 2, -2), 1}, {mono(2, 4, -2), 1}}).delta_degrees() ==
          std::set<int>{-2, 2});
    CHECK(LaurentPoly::zero().delta_degrees().empty());
    CHECK_THROWS_AS(LaurentPoly(1, mono(1, 0, 0)).delta_degrees(), std::domain_error);
    CHECK_THROWS_AS(LaurentPoly(1, mono(0, 0, 0, 2)).delta_degrees(), std::domain_error);
}

TEST_CASE("exact division by 1 + m") {
    // 1 + t q^6 divided by itself
    auto f = exact_div_by_one_plus(P({{mono(0, 0, 0), 1}, {mono(2, 6, 0), 1}}),
                                   mono(2, 6, 0));
    REQUIRE(f);
    CHECK(*f == LaurentPoly::one());

    auto g = exact_div_by_one_plus(P({{mono(0, -2, 0), 1},
                                      {mono(2, 4, 0), 1},
                                      {mono(2, -4, 0), 1},
                                      {mono(4, 2, 0), 1}}),
                                   mono(2, 6, 0));
    REQUIRE(g);
    CHECK(*g == P({{mono(0, -2, 0), 1}, {mono(2, -4, 0), 1}}));

    CHECK(!exact_div_by_one_plus(P({{mono(0, 0, 0), 1}, {mono(2, 4, 0), 1}}),
                                 mono(2, 6, 0)));
    CHECK_THROWS_AS(exact_div_by_one_plus(LaurentPoly::one(), Monomial{}),
                    std::domain_error);
}

TEST_CASE("printing") {
    CHECK(trefoil_table().evaluate_t_minus_one().str() == "a^-2 q^2 + a^-2 q^-2 - a^-4");
    CHECK(LaurentPoly::zero().str() == "0");
    CHECK(LaurentPoly(1, mono(1, 0, -1)).str() == "t^1/2 a^-1");
    CHECK(LaurentPoly(-3).str() == "-3");
}

TEST_CASE("property: leq is an order, mul is a commutative ring") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly p = random_poly(rng), s = random_poly(rng), u = random_poly(rng);
        CHECK(leq(p, p));
        if (leq(p, s) && leq(s, p)) CHECK(p == s);
        if (leq(p, s) && leq(s, u)) CHECK(leq(p, u));
        CHECK(p * s == s * p);
        CHECK((p * s) * u == p * (s * u));
        CHECK(p * (s + u) == p * s + p * u);
        CHECK((p * s).dual() == p.dual() * s.dual());
        CHECK(p.dual().dual() == p);
        CHECK((p * s).substitute_a(3) == p.substitute_a(3) * s.substitute_a(3));
    }
}

TEST_CASE("property: division inverts multiplication by 1 + m") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> e(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly f = random_poly(rng, /*nonneg=*/true);
        Monomial m = mono(2 * e(rng), e(rng), e(rng), 0);
        if (m.is_one()) continue;
        LaurentPoly prod = f + f.shifted(m);
        auto back = exact_div_by_one_plus(prod, m);
        REQUIRE(back);
        CHECK(*back == f);
    }
}
