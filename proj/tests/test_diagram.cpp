#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotlib/diagram.hpp"

using namespace knotlib;

namespace {

Diagram random_braid_closure(std::mt19937& rng, int max_letters = 7) {
    std::uniform_int_distribution<int> ns(2, 4);
    int strands = ns(rng);
    std::uniform_int_distribution<int> nl(1, max_letters);
    std::uniform_int_distribution<int> gen(1, strands - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> word;
    int letters = nl(rng);
    for (int i = 0; i < letters; ++i) word.push_back(gen(rng) * (coin(rng) ? 1 : -1));
    return Diagram::from_braid(word, strands);
}

}  // namespace

TEST_CASE("braid closures") {
    Diagram tre = Diagram::from_braid({1, 1, 1}, 2);
    CHECK(tre.crossing_count() == 3);
    CHECK(tre.components() == 1);
    CHECK(tre.writhe() == 3);

    Diagram hopf = Diagram::from_braid({1, 1}, 2);
    CHECK(hopf.crossing_count() == 2);
    CHECK(hopf.components() == 2);

    CHECK_THROWS_AS(Diagram::from_braid({2}, 2), std::invalid_argument);

    // an untouched strand closes to a free loop
    Diagram split = Diagram::from_braid({1, 1, 1}, 3);
    CHECK(split.components() == 2);
    CHECK(split.free_loops() == 1);

    CHECK(Diagram::unknot().components() == 1);
}

TEST_CASE("pretzel diagrams") {
    Diagram p = Diagram::pretzel(5, -3, 2);
    CHECK(p.crossing_count() == 10);
    CHECK(p.components() == 1);

    Diagram u = Diagram::pretzel(1, -1, 0);
    CHECK(u.crossing_count() == 2);
    CHECK(u.components() == 1);

    // two even entries split the diagram into two components
    CHECK(Diagram::pretzel(4, -2, 3).components() == 2);
    CHECK(Diagram::pretzel(2, -2, 2).components() == 3);

    // one even entry always yields a knot
    CHECK(Diagram::pretzel(3, -3, 2).components() == 1);
    CHECK(Diagram::pretzel(7, -5, 4).components() == 1);
    CHECK(Diagram::pretzel(3, 3, 3).components() == 1);
}

TEST_CASE("seifert statistics of the standard pretzels") {
    for (auto [l, m, n] : {std::array<int, 3>{5, 3, 2}, {7, 5, 4}, {9, 5, 6}}) {
        CAPTURE(l);
        SeifertStats st = seifert_stats(Diagram::pretzel(l, -m, n));
        CHECK(st.writhe == l - m - n);
        CHECK(st.circles == n + 1);
        CHECK(st.o_plus == n);
        CHECK(st.o_minus == 1);
        RatInterval b = bennequin_bounds(st);
        CHECK(b.lo() == rat(l - m - 2));
        CHECK(b.hi() == rat(l - m));
        CHECK(!is_homogeneous(st));
    }
}

TEST_CASE("seifert statistics of braids and the unknot") {
    SeifertStats st = seifert_stats(Diagram::from_braid({1, 1, 1}, 2));
    CHECK(st.writhe == 3);
    CHECK(st.circles == 2);
    CHECK(st.o_plus == 1);
    CHECK(st.o_minus == 2);  // no negative edges: two isolated vertices
    CHECK(is_homogeneous(st));
    RatInterval b = bennequin_bounds(st);
    CHECK(b.lo() == rat(2));
    CHECK(b.hi() == rat(2));

    SeifertStats u = seifert_stats(Diagram::unknot());
    CHECK(u.writhe == 0);
    CHECK(u.circles == 1);
    CHECK(u.o_plus == 1);
    CHECK(u.o_minus == 1);
    CHECK(is_homogeneous(u));
    CHECK(bennequin_bounds(u) == RatInterval(rat(0), rat(0)));
}

TEST_CASE("positive braid value") {
    CHECK(positive_braid_value({1, 1, 1}, 2) == 2);
    CHECK(positive_braid_value({1, 1, 1, 1, 1}, 2) == 4);
    CHECK(positive_braid_value({1, 2, 1, 2}, 3) == 2);  // the (2,3) torus knot
    CHECK_THROWS_AS(positive_braid_value({1, -2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(positive_braid_value({1, 2, 2, 1}, 3), std::invalid_argument);
}

TEST_CASE("mirror") {
    Diagram tre = Diagram::from_braid({1, 1, 1}, 2);
    Diagram mir = tre.mirror();
    CHECK(mir.writhe() == -3);
    CHECK(mir.mirror().canonical_key() == tre.canonical_key());
    SeifertStats st = seifert_stats(tre), sm = seifert_stats(mir);
    CHECK(sm.circles == st.circles);
    CHECK(sm.o_plus == st.o_minus);
    CHECK(sm.o_minus == st.o_plus);
}

TEST_CASE("smoothing and switching") {
    Diagram tre = Diagram::from_braid({1, 1, 1}, 2);
    CHECK(tre.switch_crossing(0).writhe() == 1);
    Diagram sm = tre.smooth_crossing(0);
    CHECK(sm.crossing_count() == 2);
    CHECK(sm.components() == 2);  // the positive Hopf link

    // smoothing the Hopf link gives an unknot, then two free loops
    Diagram once = sm.smooth_crossing(0);
    CHECK(once.crossing_count() == 1);
    CHECK(once.components() == 1);
    Diagram twice = once.smooth_crossing(0);
    CHECK(twice.crossing_count() == 0);
    CHECK(twice.components() == 2);
}

TEST_CASE("canonical keys identify relabeled diagrams") {
    Diagram a = Diagram::from_braid({1, 1, 1}, 2);
    // same diagram with shuffled crossing order and arc names
    std::vector<Crossing> cs = a.crossings();
    std::swap(cs[0], cs[2]);
    for (auto& c : cs)
        for (int s = 0; s < 4; ++s) c.arc[s] = 5 * c.arc[s] + 11;
    Diagram b(cs, 0);
    CHECK(a.canonical_key() == b.canonical_key());
    CHECK(a.canonical_key() != a.mirror().canonical_key());
}

TEST_CASE("signature of torus knots, pretzels and rational knots") {
    CHECK(signature(Diagram::from_braid({1, 1, 1}, 2)) == 2);
    CHECK(signature(Diagram::from_braid({1, 1, 1, 1, 1}, 2)) == 4);
    CHECK(signature(Diagram::from_braid({-1, -1, -1}, 2)) == -2);
    for (int ell : {3, 5, 7, 9}) {
        std::vector<int> word(ell, 1);
        CHECK(signature(Diagram::from_braid(word, 2)) == ell - 1);
    }
    CHECK(signature(Diagram::pretzel(5, -3, 2)) == 2);
    CHECK(signature(Diagram::pretzel(7, -5, 4)) == 2);
    CHECK(signature(Diagram::pretzel(9, -5, 4)) == 4);
    CHECK(signature(Diagram::pretzel(9, -7, 6)) == 2);
    CHECK(signature(Diagram::unknot()) == 0);

    // figure eight: amphichiral, signature 0, determinant 5
    Diagram fig8 = Diagram::rational({2, 2});
    CHECK(fig8.crossing_count() == 4);
    CHECK(fig8.components() == 1);
    CHECK(signature(fig8) == 0);
    CHECK(knot_determinant(fig8) == 5);

    CHECK(knot_determinant(Diagram::from_braid({1, 1, 1}, 2)) == 3);
    // |pq + pr + qr| for P(p,q,r)
    CHECK(knot_determinant(Diagram::pretzel(5, -3, 2)) == 11);
}

TEST_CASE("two-bridge construction hits the right knots") {
    // continued fraction [3,1,1,3] = 25/7, an 8-crossing amphichiral knot
    Diagram k = Diagram::rational({3, 1, 1, 3});
    CHECK(k.crossing_count() == 8);
    CHECK(k.components() == 1);
    CHECK(knot_determinant(k) == 25);
    CHECK(signature(k) == 0);

    Diagram t = Diagram::rational({3});
    CHECK(t.components() == 1);
    CHECK(knot_determinant(t) == 3);
}

TEST_CASE("signature antisymmetry under mirror") {
    std::mt19937 rng(4242);
    int done = 0;
    while (done < 10) {
        Diagram d = random_braid_closure(rng);
        if (!d.is_knot() || d.crossing_count() == 0 || d.free_loops() > 0) continue;
        ++done;
        CHECK(signature(d.mirror()) == -signature(d));
    }
}

TEST_CASE("seifert stats are relabeling invariant") {
    Diagram p = Diagram::pretzel(5, -3, 2);
    std::vector<Crossing> cs = p.crossings();
    for (auto& c : cs)
        for (int s = 0; s < 4; ++s) c.arc[s] = 7 * c.arc[s] + 3;
    Diagram q(cs, 0);
    SeifertStats a = seifert_stats(p), b = seifert_stats(q);
    CHECK(a.writhe == b.writhe);
    CHECK(a.circles == b.circles);
    CHECK(a.o_plus == b.o_plus);
    CHECK(a.o_minus == b.o_minus);
}

TEST_CASE("random braid closures: circles, bounds, homogeneity") {
    std::mt19937 rng(11);
    int done = 0;
    while (done < 30) {
        Diagram d = random_braid_closure(rng);
        if (!d.is_knot()) continue;
        ++done;
        SeifertStats st = seifert_stats(d);
        // the oriented resolution of a braid closure is the strand circles
        CHECK(st.circles >= 1);
        RatInterval b = bennequin_bounds(st);
        CHECK(b.lo() <= b.hi());
        CHECK((b.lo() == b.hi()) == is_homogeneous(st));
    }
    SeifertStats st = seifert_stats(Diagram::from_braid({1, -2, 1, -2, 3}, 4));
    CHECK(st.circles == 4);
}

TEST_CASE("pd round trip") {
    Diagram p = Diagram::pretzel(5, -3, 2);
    CHECK(p.pd_str().find("X") == 0);
}
