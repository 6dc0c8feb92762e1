#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knotlib/bounds.hpp"

using namespace knotlib;

namespace {

LaurentPoly P(std::initializer_list<std::pair<Monomial, long>> terms) {
    LaurentPoly p;
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

}  // namespace

TEST_CASE("xn extraction") {
    for (int N : {2, 5, 9})
        CHECK(xn_set(torus_t2(3), N).values == std::set<long>{2 - 2L * N});
    CHECK(xn_set(HomologyTable(LaurentPoly::one()), 4).values == std::set<long>{0});

    // bound table with degree-zero part 3 q^-2 + 1
    HomologyTable b(P({{mono(0, -2, 0), 3}, {mono(0, 0, 0), 1}, {mono(2, 4, -2), 1}}));
    XnSet x = xn_set(BoundTable(b, true), 3);
    CHECK(x.values == std::set<long>{-2, 0});
    CHECK(x.is_upper_bound_source);

    HomologyTable no_zero(P({{mono(2, 0, 0), 1}}));
    CHECK_THROWS_AS(xn_set(no_zero, 2), std::domain_error);
}

TEST_CASE("sn intervals") {
    XnSet tre{{2 - 2 * 4}, false};
    RatInterval iv = sn_interval(tre, 4);
    CHECK(iv.lo() == rat(2));
    CHECK(iv.hi() == rat(2));
    CHECK(iv.candidates() == std::vector<Rat>{rat(2)});

    XnSet two{{-2, 0}, true};
    RatInterval i3 = sn_interval(two, 3);
    CHECK(i3.lo() == rat(0));
    CHECK(i3.hi() == rat(1));
    CHECK(i3.candidates() == std::vector<Rat>{rat(0), rat(1)});

    RatInterval i5 = sn_interval(two, 5);
    CHECK(i5.hi() == rat(1, 2));
    CHECK(i5.candidates() == std::vector<Rat>{rat(0), rat(1, 2)});
}

TEST_CASE("les bound operators") {
    // bound for the knot obtained by switching a negative crossing of the
    // unknot's diagram whose resolution is the positive Hopf link
    BoundTable up = les_bound_plus(BoundTable(HomologyTable(LaurentPoly::one())), hopf_rr());
    CHECK(up.upper_bound());
    CHECK(up.table().dims() == P({{mono(4, 0, -2), 1},
                                  {mono(0, 2, -2), 1},
                                  {mono(2, 0, -2), 1},
                                  {mono(4, -2, -2), 1},
                                  {mono(6, 0, -4), 1}}));

    BoundTable down =
        les_bound_minus(BoundTable(HomologyTable(LaurentPoly::one())), hopf_rr());
    CHECK(down.table().dims() == P({{mono(-4, 0, 2), 1},
                                    {mono(-2, 2, 0), 1},
                                    {mono(0, 0, 0), 1},
                                    {mono(2, -2, 0), 1},
                                    {mono(4, 0, -2), 1}}));

    // trefoil bound: seven terms
    BoundTable tre = les_bound_plus(BoundTable(torus_t2(3)), hopf_rr());
    CHECK(tre.table().dims().term_count() == 7);
}

TEST_CASE("les chain for the (l, 2-l, 2) pretzels") {
    for (int ell : {5, 7, 9}) {
        CAPTURE(ell);
        HomologyTable kplus =
            connected_sum(torus_t2(ell), mirror_table(torus_t2(ell - 2)));
        BoundTable bound = les_bound_minus(BoundTable(kplus), hopf_rr());
        LaurentPoly t0 = bound.table().dims().t_component(0);
        // restrict to a-degree 0
        LaurentPoly t0a0;
        for (const auto& [m, c] : t0.terms())
            if (m.a == 0) t0a0.add_term(m, c);
        CHECK(t0a0 == P({{mono(0, -2, 0), ell - 2}, {mono(0, 0, 0), 1}}));
    }
}

TEST_CASE("stable lifting certificate") {
    LaurentPoly qa = P({{mono(0, 1, 1), 1}});
    LaurentPoly rhs = P({{mono(0, 2, 0), 1}, {mono(0, 1, 1), 1}});
    CHECK(lift_stable(qa, rhs, 10, q_span(qa, rhs)));
    CHECK(leq(qa.substitute_a(10), rhs.substitute_a(10)));
    CHECK(leq(qa, rhs));

    CHECK(!lift_stable(qa, rhs, 1, 5));

    // certified N with a failing specialised comparison lifts to "not <="
    LaurentPoly a = P({{mono(0, 0, 1), 1}});
    LaurentPoly q2 = P({{mono(0, 2, 0), 1}});
    CHECK(q_span(a, q2) == 2);
    CHECK(lift_stable(a, q2, 3, 2));
    CHECK(!leq(a.substitute_a(3), q2.substitute_a(3)));
    CHECK(!leq(a, q2));
}

TEST_CASE("les steps never shrink a table") {
    for (const HomologyTable& h : {torus_t2(3), torus_t2(5)}) {
        BoundTable once = les_bound_plus(BoundTable(h), hopf_rr());
        BoundTable twice = les_bound_minus(once, hopf_rr());
        CHECK(leq(h.dims(), twice.table().dims()));
    }
}

TEST_CASE("monotonicity of intervals under table growth") {
    HomologyTable small(P({{mono(0, 2, -2), 1}}));
    HomologyTable big(P({{mono(0, 2, -2), 1}, {mono(0, -2, 0), 2}}));
    for (int N : {2, 3, 4}) {
        RatInterval a = sn_interval(xn_set(small, N), N);
        RatInterval b = sn_interval(xn_set(big, N), N);
        CHECK(b.lo() <= a.lo());
        CHECK(b.hi() >= a.hi());
    }
}

TEST_CASE("json record") {
    XnSet x{{-2, 0}, true};
    std::string j = bounds_json(x, 3);
    CHECK(j.find("\"N\": 3") != std::string::npos);
    CHECK(j.find("\"upper_bound_source\": true") != std::string::npos);
    CHECK(j.find("\"candidates\": [\"0\", \"1\"]") != std::string::npos);
}
