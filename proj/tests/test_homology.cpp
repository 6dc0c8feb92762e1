#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotlib/homology.hpp"
#include "knotlib/skein.hpp"

using namespace knotlib;

namespace {

LaurentPoly P(std::initializer_list<std::pair<Monomial, long>> terms) {
    LaurentPoly p;
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

LaurentPoly trefoil_table() {
    return P({{mono(0, 2, -2), 1}, {mono(4, -2, -2), 1}, {mono(6, 0, -4), 1}});
}

LaurentPoly trefoil_homfly() {
    return P({{mono(0, 2, -2), 1}, {mono(0, -2, -2), 1}, {mono(0, 0, -4), -1}});
}

}  // namespace

TEST_CASE("thin reconstruction") {
    CHECK(kr_thin(trefoil_homfly(), 2).dims() == trefoil_table());
    CHECK(kr_thin(LaurentPoly::one(), 0).dims() == LaurentPoly::one());
    CHECK_THROWS_AS(kr_thin(trefoil_homfly(), 0), std::domain_error);
}

TEST_CASE("torus closed form") {
    CHECK(torus_t2(3).dims() == trefoil_table());
    CHECK(torus_t2(5).dims() == P({{mono(0, 4, -4), 1},
                                   {mono(4, 0, -4), 1},
                                   {mono(6, 2, -6), 1},
                                   {mono(8, -4, -4), 1},
                                   {mono(10, -2, -6), 1}}));
    CHECK_THROWS_AS(torus_t2(2), std::domain_error);
    CHECK_THROWS_AS(torus_t2(1), std::domain_error);

    for (int ell : {3, 5, 7, 9}) {
        CAPTURE(ell);
        std::vector<int> word(ell, 1);
        LaurentPoly pinf = homflypt(Diagram::from_braid(word, 2));
        CHECK(torus_t2(ell).dims().evaluate_t_minus_one() == pinf);
        CHECK(is_thin(torus_t2(ell), ell - 1));
        CHECK(kr_thin(pinf, ell - 1).dims() == torus_t2(ell).dims());
    }
}

TEST_CASE("connected sums and mirrors of tables") {
    HomologyTable tre(trefoil_table());
    CHECK(connected_sum(tre, HomologyTable(LaurentPoly::one())) == tre);
    // the square of the three-term table collapses to 6 monomials of
    // total dimension 9
    CHECK(connected_sum(tre, tre).dims().term_count() == 6);
    CHECK(connected_sum(tre, tre).total_dim() == 9);
    CHECK(connected_sum(tre, tre).dims().evaluate_t_minus_one() ==
          trefoil_homfly() * trefoil_homfly());

    CHECK(mirror_table(tre).dims() ==
          P({{mono(0, -2, 2), 1}, {mono(-4, 2, 2), 1}, {mono(-6, 0, 4), 1}}));
    CHECK(mirror_table(mirror_table(tre)) == tre);
    CHECK(mirror_table(HomologyTable(LaurentPoly::one())).dims() == LaurentPoly::one());

    CHECK_THROWS_AS(connected_sum(tre, hopf_rr()), std::domain_error);
}

TEST_CASE("hopf link table") {
    HomologyTable h = hopf_rr();
    CHECK(h.dims().term_count() == 4);
    CHECK(h.total_dim() == 4);
    CHECK(!h.is_knot_table());
    CHECK_THROWS_AS(h.dims().delta_degrees(), std::domain_error);
}

TEST_CASE("thinness checks") {
    HomologyTable tre(trefoil_table());
    CHECK(is_thin(tre, 2));
    CHECK(!is_thin(tre, 0));
    CHECK(is_thin(torus_t2(7), 6));
    CHECK(!is_thin(HomologyTable(P({{mono(0, 2, -2), 1}, {mono(2, 4, -2), 1}})), 2));
}

TEST_CASE("thin reconstruction round trips at t = -1") {
    for (int ell : {3, 5, 7, 9}) {
        LaurentPoly p = torus_t2(ell).dims().evaluate_t_minus_one();
        HomologyTable h = kr_thin(p, ell - 1);
        CHECK(h.dims().evaluate_t_minus_one() == p);
        CHECK(is_thin(h, ell - 1));
    }
}

TEST_CASE("delta degrees add under connected sums") {
    for (int l1 : {3, 5})
        for (int l2 : {3, 7}) {
            HomologyTable sum = connected_sum(torus_t2(l1), mirror_table(torus_t2(l2)));
            auto ds = sum.dims().delta_degrees();
            for (int d : ds) CHECK(d == (1 - l1) + (l2 - 1));
        }
}

TEST_CASE("published pretzel table") {
    HomologyTable p = pretzel_5m3_2_published();
    CHECK(p.total_dim() == 13);
    CHECK(p.dims().t_component(0) == P({{mono(0, 2, 0), 2}, {mono(0, 0, 0), 1}}));
}

TEST_CASE("grid rendering") {
    LaurentPoly two_q = P({{mono(0, 2, 0), 1}, {mono(2, 0, 0), 2}});
    std::string g = HomologyTable(two_q).grid();
    CHECK(g.find("q\\t") != std::string::npos);
    CHECK(g.find('2') != std::string::npos);
}
