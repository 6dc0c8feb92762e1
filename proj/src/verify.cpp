#include "knotlib/verify.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "knotlib/bounds.hpp"
#include "knotlib/decomp.hpp"
#include "knotlib/homology.hpp"
#include "knotlib/knotspec.hpp"
#include "knotlib/skein.hpp"
#include "knotlib/solver.hpp"

namespace knotlib::verify {

namespace {

struct Runner {
    std::ostream& out;
    bool all_ok = true;

    void criterion(int n, const std::string& label,
                   const std::function<void()>& body) {
        auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            body();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2fs", secs);
        if (failure.empty()) {
            out << "PASS criterion " << n << " (" << label << ") [" << buf << "]\n";
        } else {
            out << "FAIL criterion " << n << " (" << label << ") [" << buf
                << "]: " << failure << "\n";
            all_ok = false;
        }
    }
};

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

LaurentPoly P(std::initializer_list<std::pair<Monomial, long>> terms) {
    LaurentPoly p;
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

LaurentPoly trefoil_polynomial() {
    return P({{mono(0, 2, -2), 1}, {mono(0, -2, -2), 1}, {mono(0, 0, -4), -1}});
}

LaurentPoly torus_word_homfly(int ell) {
    std::vector<int> word(ell, 1);
    return homflypt(Diagram::from_braid(word, 2));
}

Diagram random_braid_closure(std::mt19937& rng, int max_crossings, bool knots_only) {
    for (;;) {
        std::uniform_int_distribution<int> ns(2, 4);
        int strands = ns(rng);
        std::uniform_int_distribution<int> nl(1, max_crossings);
        std::uniform_int_distribution<int> gen(1, strands - 1);
        std::uniform_int_distribution<int> coin(0, 1);
        std::vector<int> word;
        int letters = nl(rng);
        for (int i = 0; i < letters; ++i)
            word.push_back(gen(rng) * (coin(rng) ? 1 : -1));
        Diagram d = Diagram::from_braid(word, strands);
        if (!knots_only || (d.is_knot() && d.free_loops() == 0)) return d;
    }
}

// bound table of the (ell, 2-ell, 2) pretzel from the torus-sum chain
BoundTable pretzel2_bound(int ell) {
    HomologyTable kplus = connected_sum(torus_t2(ell), mirror_table(torus_t2(ell - 2)));
    return les_bound_minus(BoundTable(kplus), hopf_rr());
}

// and one more step down to the (ell, 2-ell, 4) pretzel
BoundTable pretzel4_bound(int ell) {
    return les_bound_minus(pretzel2_bound(ell), hopf_rr());
}

std::vector<Constraint> thm4_constraints(int l, int m, int n, int N) {
    std::vector<Constraint> cs;
    std::string inv = "s_" + std::to_string(N);
    char buf[160];
    // long-exact-sequence input on P(m+2, -m, 4), computed from the tables
    RatInterval seed = sn_interval(xn_set(pretzel4_bound(m + 2), N), N);
    std::snprintf(buf, sizeof(buf), "value %s P(%d,-%d,4) in [%s,%s]", inv.c_str(),
                  m + 2, m, rat_str(seed.lo()).c_str(), rat_str(seed.hi()).c_str());
    cs.push_back(parse_constraint_line(buf));
    for (int k = 4; k < n; k += 2) {
        std::snprintf(buf, sizeof(buf), "xchg %s P(%d,-%d,%d) P(%d,-%d,%d) 1",
                      inv.c_str(), m + 2, m, k, m + 2, m, k + 2);
        cs.push_back(parse_constraint_line(buf));
    }
    for (int k = m + 2; k < l; k += 2) {
        std::snprintf(buf, sizeof(buf), "xchg %s P(%d,-%d,%d) P(%d,-%d,%d) 1",
                      inv.c_str(), k + 2, m, n, k, m, n);
        cs.push_back(parse_constraint_line(buf));
    }
    SeifertStats st = seifert_stats(Diagram::pretzel(l, -m, n));
    RatInterval ben = bennequin_bounds(st);
    std::snprintf(buf, sizeof(buf), "bennequin nu P(%d,-%d,%d) [%s,%s]", l, m, n,
                  rat_str(ben.lo()).c_str(), rat_str(ben.hi()).c_str());
    cs.push_back(parse_constraint_line(buf));
    std::snprintf(buf, sizeof(buf), "lattice %s step 2/%d", inv.c_str(), N - 1);
    cs.push_back(parse_constraint_line(buf));
    return cs;
}

// left table of the published reduced sl_3 homology of the (5,-3,2) pretzel
LaurentPoly sl3_reduced_p532() {
    return P({{mono(10, 10, 0), 1},
              {mono(6, 6, 0), 1},
              {mono(8, 6, 0), 1},
              {mono(2, 2, 0), 1},
              {mono(4, 2, 0), 2},
              {mono(0, 0, 0), 1},
              {mono(0, -2, 0), 2},
              {mono(2, -2, 0), 1},
              {mono(-4, -6, 0), 1},
              {mono(-2, -6, 0), 1},
              {mono(-6, -10, 0), 1}});
}

// its published first page, with the extra grading carried by r
LaurentPoly sl3_e1_p532() {
    return P({{mono(10, 12, 0, 2), 1}, {mono(10, 10, 0, 0), 1},
              {mono(6, 8, 0, 2), 1},   {mono(8, 8, 0, 2), 1},
              {mono(10, 8, 0, -2), 1}, {mono(6, 6, 0, 0), 1},
              {mono(8, 6, 0, 0), 1},   {mono(2, 4, 0, 2), 1},
              {mono(4, 4, 0, 2), 2},   {mono(6, 4, 0, -2), 1},
              {mono(8, 4, 0, -2), 1},  {mono(0, 2, 0, 2), 1},
              {mono(2, 2, 0, 0), 1},   {mono(4, 2, 0, 0), 2},
              {mono(0, 0, 0, 2), 2},   {mono(0, 0, 0, 0), 1},
              {mono(2, 0, 0, -2), 1},  {mono(2, 0, 0, 2), 1},
              {mono(4, 0, 0, -2), 2},  {mono(0, -2, 0, 0), 2},
              {mono(0, -2, 0, -2), 1}, {mono(2, -2, 0, 0), 1},
              {mono(-4, -4, 0, 2), 1}, {mono(-2, -4, 0, 2), 1},
              {mono(0, -4, 0, -2), 2}, {mono(2, -4, 0, -2), 1},
              {mono(-4, -6, 0, 0), 1}, {mono(-2, -6, 0, 0), 1},
              {mono(-6, -8, 0, 2), 1}, {mono(-4, -8, 0, -2), 1},
              {mono(-2, -8, 0, -2), 1},{mono(-6, -10, 0, 0), 1},
              {mono(-6, -12, 0, -2), 1}});
}

// the published third (limit) page
LaurentPoly sl3_e3_p532() {
    return P({{mono(10, 12, 0, 2), 1}, {mono(10, 10, 0, 0), 1},
              {mono(6, 8, 0, 2), 1},   {mono(6, 6, 0, 0), 1},
              {mono(8, 6, 0, 0), 1},   {mono(2, 4, 0, 2), 1},
              {mono(4, 4, 0, 2), 1},   {mono(8, 4, 0, -2), 1},
              {mono(4, 2, 0, 0), 2},   {mono(0, 0, 0, 2), 2},
              {mono(4, 0, 0, -2), 1},  {mono(0, -2, 0, 0), 2},
              {mono(0, -2, 0, -2), 1}, {mono(2, -2, 0, 0), 1},
              {mono(-4, -4, 0, 2), 1}, {mono(0, -4, 0, -2), 1},
              {mono(2, -4, 0, -2), 1}, {mono(-4, -6, 0, 0), 1},
              {mono(-2, -6, 0, 0), 1}, {mono(-2, -8, 0, -2), 1},
              {mono(-6, -10, 0, 0), 1},{mono(-6, -12, 0, -2), 1}});
}

struct Chain {
    std::string base;
    int sigma = 0;
    std::vector<int> steps;  // +1 for a plus step, -1 for minus
};

std::map<std::string, Chain> load_chains(const std::string& data_dir) {
    std::map<std::string, Chain> out;
    std::ifstream in(data_dir + "/chains.txt");
    std::string line;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        Chain c;
        std::string name = line.substr(0, colon);
        std::istringstream rest(line.substr(colon + 1));
        std::string tok;
        while (rest >> tok) {
            if (tok == "base") rest >> c.base;
            else if (tok == "sigma") rest >> c.sigma;
            else if (tok == "steps") {
                std::string steps;
                rest >> steps;
                std::istringstream ss(steps);
                std::string s;
                while (std::getline(ss, s, ','))
                    c.steps.push_back(s == "plus" ? +1 : -1);
            }
        }
        out[name] = c;
    }
    return out;
}

}  // namespace

bool run_all(const Options& opt, std::ostream& out) {
    Runner r{out};

    r.criterion(1, "trefoil pipeline", [&] {
        LaurentPoly p = homflypt(Diagram::from_braid({1, 1, 1}, 2));
        require(p == trefoil_polynomial(), "trefoil HOMFLYPT value");
        HomologyTable h = kr_thin(p, 2);
        require(h.dims() == P({{mono(0, 2, -2), 1},
                               {mono(4, -2, -2), 1},
                               {mono(6, 0, -4), 1}}),
                "thin reconstruction of the trefoil table");
        for (int N = 2; N <= 10; ++N) {
            RatInterval s = sn_interval(xn_set(h, N), N);
            require(s.is_point() && s.lo() == rat(2),
                    "s_" + std::to_string(N) + " of the trefoil");
        }
    });

    r.criterion(2, "torus family", [&] {
        for (int ell : {3, 5, 7, 9}) {
            HomologyTable h = torus_t2(ell);
            require(h.dims().evaluate_t_minus_one() == torus_word_homfly(ell),
                    "closed form vs skein recursion, ell=" + std::to_string(ell));
            require(is_thin(h, ell - 1), "thinness of the torus table");
            for (int N = 2; N <= 10; ++N) {
                RatInterval s = sn_interval(xn_set(h, N), N);
                require(s.is_point() && s.lo() == rat(ell - 1),
                        "torus s_N point value");
            }
        }
    });

    r.criterion(3, "pretzel long-exact-sequence bounds", [&] {
        for (int ell : {5, 7, 9}) {
            BoundTable b = pretzel2_bound(ell);
            LaurentPoly t0 = b.table().dims().t_component(0);
            LaurentPoly t0a0;
            for (const auto& [m, c] : t0.terms())
                if (m.a == 0) t0a0.add_term(m, c);
            require(t0a0 == P({{mono(0, -2, 0), ell - 2}, {mono(0, 0, 0), 1}}),
                    "degree-zero part, ell=" + std::to_string(ell));
            LaurentPoly t2 = b.table().dims().t_component(4);
            require(leq(t2, P({{mono(0, -6, 0), ell - 4}, {mono(0, 0, -2), 1}})),
                    "degree-two part bound, ell=" + std::to_string(ell));
            for (int N = 2; N <= 8; ++N) {
                auto cands = sn_interval(xn_set(b, N), N).candidates();
                require(cands.size() == 2 && cands[0] == rat(0) &&
                            cands[1] == rat(2, N - 1),
                        "candidate set {0, 2/(N-1)}");
            }
        }
    });

    r.criterion(4, "seifert statistics and bennequin bounds", [&] {
        for (auto [l, m, n] : {std::array<int, 3>{5, 3, 2}, {7, 5, 4}, {9, 5, 6}}) {
            SeifertStats st = seifert_stats(Diagram::pretzel(l, -m, n));
            require(st.writhe == l - m - n, "writhe");
            require(st.circles == n + 1, "circle count");
            require(st.o_plus == n && st.o_minus == 1, "subgraph components");
            RatInterval b = bennequin_bounds(st);
            require(b.lo() == rat(l - m - 2) && b.hi() == rat(l - m),
                    "bennequin interval");
        }
    });

    r.criterion(5, "constraint solver reproduces the pretzel values", [&] {
        for (auto [l, m, n] : {std::array<int, 3>{7, 5, 4}, {9, 5, 4}, {9, 7, 6}})
            for (int N = 3; N <= 8; ++N) {
                std::string inv = "s_" + std::to_string(N);
                Assignment a = propagate(thm4_constraints(l, m, n, N), inv);
                char name[64];
                std::snprintf(name, sizeof(name), "P(%d,-%d,%d)", l, m, n);
                RatInterval v = a.at(name);
                require(v.is_point() && v.lo() == rat(l - m - 2),
                        std::string(name) + " " + inv);
            }
        // n = 2: the solver must leave exactly the two candidates
        for (int N = 3; N <= 8; ++N) {
            std::string inv = "s_" + std::to_string(N);
            std::vector<Constraint> cs;
            RatInterval seed = sn_interval(xn_set(pretzel2_bound(5), N), N);
            char buf[160];
            std::snprintf(buf, sizeof(buf), "value %s P(5,-3,2) in [%s,%s]",
                          inv.c_str(), rat_str(seed.lo()).c_str(),
                          rat_str(seed.hi()).c_str());
            cs.push_back(parse_constraint_line(buf));
            SeifertStats st = seifert_stats(Diagram::pretzel(5, -3, 2));
            RatInterval ben = bennequin_bounds(st);
            std::snprintf(buf, sizeof(buf), "bennequin nu P(5,-3,2) [%s,%s]",
                          rat_str(ben.lo()).c_str(), rat_str(ben.hi()).c_str());
            cs.push_back(parse_constraint_line(buf));
            std::snprintf(buf, sizeof(buf), "lattice %s step 2/%d", inv.c_str(), N - 1);
            cs.push_back(parse_constraint_line(buf));
            Assignment a = propagate(cs, inv);
            auto cands = a.at("P(5,-3,2)").candidates();
            require(cands.size() == 2 && cands[0] == rat(0) &&
                        cands[1] == rat(2, N - 1),
                    "two-candidate set for P(5,-3,2), N=" + std::to_string(N));
        }
        // an inconsistent file must report a contradiction
        bool contradicted = false;
        try {
            auto cs = thm4_constraints(7, 5, 4, 3);
            cs.push_back(parse_constraint_line("value s_3 P(7,-5,4) = 2"));
            propagate(cs, "s_3");
        } catch (const contradiction_error&) {
            contradicted = true;
        }
        require(contradicted, "inconsistent constraint set must be rejected");
    });

    r.criterion(6, "signature", [&] {
        require(signature(Diagram::from_braid({1, 1, 1}, 2)) == 2, "trefoil");
        require(signature(Diagram::pretzel(5, -3, 2)) == 2, "(5,-3,2) pretzel");
        std::mt19937 rng(opt.seed);
        int done = 0;
        while (done < 10) {
            Diagram d = random_braid_closure(rng, 7, true);
            if (d.crossing_count() == 0) continue;
            require(signature(d.mirror()) == -signature(d), "mirror antisymmetry");
            ++done;
        }
    });

    r.criterion(7, "decomposition search", [&] {
        LaurentPoly A = pretzel_5m3_2_published().dims();
        for (int N : {2, 3, 4})
            for (auto [al, be] : {std::pair<int, int>{0, 0}, {2, 0}}) {
                SearchResult res = weakness_decomp(A, N, al, be);
                require(res.status == SearchStatus::found,
                        "witness for alpha=" + std::to_string(al) +
                            ", N=" + std::to_string(N));
                // substitution is re-checked inside the search on success
            }
        SearchResult toy = weakness_decomp(LaurentPoly(1, mono_q(2)), 2, 0, 0);
        require(toy.status == SearchStatus::infeasible, "toy instance proven infeasible");
    });

    r.criterion(8, "spectral-sequence bookkeeping", [&] {
        LaurentPoly e1 = first_page(sl3_reduced_p532(), 3);
        require(e1 == sl3_e1_p532(), "first page matches the published grid");
        LaurentPoly e3 = sl3_e3_p532();
        require(e1.total() - e3.total() == 14, "rank bookkeeping 2*(2+5)");

        // the two-step chain with differential degrees t r^-2, t r^-4
        LaurentPoly f1 = P({{mono(0, 2, 0, 2), 1}, {mono(0, 0, 0, 0), 1}});
        LaurentPoly e2 = e1 - f1 - f1.shifted(mono(2, 0, 0, -2));
        auto back1 = page_step_check(e1, e2, mono(2, 0, 0, -2));
        require(back1 && *back1 == f1 && f1.total() == 2, "page-one differential rank");
        auto f2 = page_step_check(e2, e3, mono(2, 0, 0, -4));
        require(f2.has_value(), "pages two and three are consecutive");
        require(f2->total() == 5, "page-two differential rank");

        std::mt19937 rng(opt.seed + 1);
        std::uniform_int_distribution<int> e(-2, 2), c(0, 3), n(0, 5);
        for (int trial = 0; trial < 100; ++trial) {
            LaurentPoly base, f;
            for (int i = n(rng); i > 0; --i)
                base.add_term(mono(2 * e(rng), e(rng), e(rng), e(rng)), c(rng));
            for (int i = n(rng); i > 0; --i)
                f.add_term(mono(2 * e(rng), e(rng), e(rng), e(rng)), c(rng));
            Monomial d = mono(2, e(rng), e(rng), e(rng));
            auto got = page_step_check(base + f + f.shifted(d), base, d);
            require(got && *got == f, "random page-step round trip");
        }
    });

    r.criterion(9, "oracle property suite", [&] {
        std::mt19937 rng(opt.seed + 2);
        for (int i = 0; i < 50; ++i) {
            Diagram d = random_braid_closure(rng, 8, false);
            require(sln_poly(d, 2) == kauffman_sl2(d), "state-sum oracle");
        }
        for (int i = 0; i < 50; ++i) {
            Diagram d = random_braid_closure(rng, 8, true);
            LaurentPoly pinf = homflypt(d);
            require(homflypt(d.mirror()) == pinf.dual(), "mirror duality");
            for (int N : {2, 3})
                require(sln_poly(d, N) == quantum_int(N) * pinf.substitute_a(N),
                        "specialisation identity");
        }
        for (int i = 0; i < 10; ++i) {
            Diagram d1 = random_braid_closure(rng, 6, true);
            Diagram d2 = random_braid_closure(rng, 6, true);
            require(homflypt(connected_sum_diagram(d1, d2)) ==
                        homflypt(d1) * homflypt(d2),
                    "connected-sum multiplicativity");
        }
    });

    r.criterion(10, "independence certificates", [&] {
        // values of the s_N family on the witness knots, from the toolkit's
        // own pipelines plus the imported program values
        std::ifstream vf(opt.data_dir + "/values.constraints");
        std::stringstream vbuf;
        vbuf << vf.rdbuf();
        std::vector<Constraint> imported = parse_constraints(vbuf.str());

        const int kTrunc = 12;
        std::vector<std::string> family_n3, family_n4;
        std::map<std::string, Assignment> values;
        for (int N = 3; N <= kTrunc; ++N) {
            std::string inv = "s_" + std::to_string(N);
            if (N >= 4) family_n4.push_back(inv);
            family_n3.push_back(inv);
            Assignment a;
            // P(7,-5,4): solver point value
            a.intervals.emplace("P(7,-5,4)",
                                propagate(thm4_constraints(7, 5, 4, N),
                                          inv).at("P(7,-5,4)"));
            // P(5,-3,2): the candidate interval from the les chain
            a.intervals.emplace("P(5,-3,2)",
                                sn_interval(xn_set(pretzel2_bound(5), N), N));
            a.intervals.emplace("T(3,2)", RatInterval::point(rat(2)));
            values.emplace(inv, a);
        }
        std::string tail =
            "for N > 12 the family values on these witnesses stay in "
            "[0, 2/(N-1)], a subset of [0, 2/12], so the hull bound holds for "
            "the whole family.";

        // part one: s_2 and 2tau are not combinations of {s_N} N >= 3
        Assignment s2, tau2;
        int sig_p754 = signature(Diagram::pretzel(7, -5, 4));
        require(sig_p754 == 2, "signature input for the quasi-alternating value");
        s2.intervals.emplace("P(7,-5,4)", RatInterval::point(rat(sig_p754)));
        tau2.intervals.emplace("P(7,-5,4)", RatInterval::point(rat(sig_p754)));
        auto c1 = certify_independence(family_n3, values, "s_2", s2, {"P(7,-5,4)"}, tail);
        require(c1.has_value(), "certificate for s_2 via P(7,-5,4)");
        auto c2 = certify_independence(family_n3, values, "2tau", tau2, {"P(7,-5,4)"}, tail);
        require(c2.has_value(), "certificate for 2tau via P(7,-5,4)");

        // the connected-sum witness: s_2 = 2tau = 0 but s_N < 0 for N >= 3
        {
            KnotExpr K = flatten_expr(parse_knot_expr("P(5,-3,2) # -T(3,2)"));
            std::map<std::string, Assignment> fam_vals;
            Assignment zero2;
            int sig_p532 = signature(Diagram::pretzel(5, -3, 2));
            Assignment base;
            base.intervals.emplace("P(5,-3,2)", RatInterval::point(rat(sig_p532)));
            base.intervals.emplace("T(3,2)", RatInterval::point(rat(2)));
            zero2.intervals.emplace("K", eval_expr(K, base));
            require(zero2.at("K") == RatInterval::point(rat(0)),
                    "s_2 and 2tau vanish on the sum witness");
            fam_vals.emplace("s_2", zero2);
            fam_vals.emplace("2tau", zero2);
            for (int N = 3; N <= kTrunc; ++N) {
                Assignment sn;
                Assignment parts;
                parts.intervals.emplace("P(5,-3,2)",
                                        values.at("s_" + std::to_string(N)).at("P(5,-3,2)"));
                parts.intervals.emplace("T(3,2)", RatInterval::point(rat(2)));
                sn.intervals.emplace("K", eval_expr(K, parts));
                RatInterval v = sn.at("K");
                require(v.hi() == rat(2, N - 1) - 2 && v.hi() < 0,
                        "s_N strictly negative on the sum witness");
                auto c = certify_independence({"s_2", "2tau"}, fam_vals,
                                              "s_" + std::to_string(N), sn, {"K"});
                require(c.has_value(), "certificate separating s_N from s_2, 2tau");
            }
        }

        // part two: s_3 is not a combination of {s_N} N >= 4
        Assignment s3;
        bool have_s3 = false;
        for (const auto& c : imported)
            if (c.kind == Constraint::Kind::Value && c.invariant == "s_3" &&
                c.e1 == KnotExpr{{"P(5,-3,2)", 1}}) {
                s3.intervals.emplace("P(5,-3,2)", c.payload);
                have_s3 = true;
            }
        require(have_s3, "imported s_3 value for P(5,-3,2)");
        auto c3 = certify_independence(family_n4, values, "s_3", s3, {"P(5,-3,2)"}, tail);
        require(c3.has_value(), "certificate for s_3 via P(5,-3,2)");
        require(c3->hull == RatInterval(rat(0), rat(2, 3)), "hull [0, 2/3]");

        // the four-summand witness with s_N <= 4/(N-1) - 2 < 0
        KnotExpr K4 = flatten_expr(
            parse_knot_expr("P(5,-3,2) # P(5,-3,2) # -P(7,-5,4) # -T(3,2)"));
        for (int N = 4; N <= kTrunc; ++N) {
            std::string inv = "s_" + std::to_string(N);
            Assignment sn;
            sn.intervals.emplace("K", eval_expr(K4, values.at(inv)));
            RatInterval v = sn.at("K");
            require(v.hi() == rat(4, N - 1) - 2 && v.hi() < 0,
                    "four-summand witness bound for " + inv);
            Assignment zero;
            zero.intervals.emplace("K", RatInterval::point(rat(0)));
            std::map<std::string, Assignment> fam_vals{
                {"s_2", zero}, {"2tau", zero}, {"s_3", zero}};
            auto c = certify_independence({"s_2", "2tau", "s_3"}, fam_vals, inv, sn,
                                          {"K"});
            require(c.has_value(), "certificate via the four-summand witness");
        }
    });

    r.criterion(11, "named-knot checks", [&] {
        std::string warn;
        auto chains = load_chains(opt.data_dir);
        if (!std::filesystem::exists(opt.data_dir + "/pd/8_9.pd")) {
            out << "WARN criterion 11: 8_9.pd absent, skipping the direct check\n";
        } else {
            Diagram k = resolve_atom("8_9", opt.data_dir);
            LaurentPoly p = homflypt(k);
            int sigma = signature(k);
            require(sigma == 0, "signature of 8_9");
            HomologyTable h = kr_thin(p, sigma);
            require(h.dims().t_component(-8) == LaurentPoly(1, mono(0, 4, 2)),
                    "degree -4 generator of 8_9");
        }
        if (!chains.count("12n_340")) {
            out << "WARN criterion 11: chain data for 12n_340 absent, skipped\n";
            return;
        }
        const Chain& ch = chains.at("12n_340");
        Diagram base = resolve_atom(ch.base, opt.data_dir);
        require(signature(base) == ch.sigma, "chain base signature");
        BoundTable b(kr_thin(homflypt(base), ch.sigma));
        for (int step : ch.steps)
            b = step > 0 ? les_bound_plus(b, hopf_rr()) : les_bound_minus(b, hopf_rr());
        require(b.table().dims().t_component(0) ==
                    P({{mono(0, 4, -2), 1}, {mono(0, 2, -2), 1}}),
                "double-chain degree-zero bound");
        for (int N = 2; N <= 8; ++N) {
            auto cands = sn_interval(xn_set(b, N), N).candidates();
            require(cands.size() == 2 && cands[0] == rat(2) - rat(2, N - 1) &&
                        cands[1] == rat(2),
                    "candidate set {2 - 2/(N-1), 2}");
        }
        if (!std::filesystem::exists(opt.data_dir + "/pd/10_141.pd") ||
            !std::filesystem::exists(opt.data_dir + "/pd/12n_340.pd")) {
            out << "WARN criterion 11: no bundled PD codes for 10_141/12n_340; "
                   "their values enter through the chain data and the imported "
                   "value file only\n";
        }
    });

    return r.all_ok;
}

}  // namespace knotlib::verify
