// Command-line front end: polynomial invariants, homology tables, s_N
// bounds, long-exact-sequence pipelines, decomposition searches and the
// constraint solver.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotlib/bounds.hpp"
#include "knotlib/decomp.hpp"
#include "knotlib/homology.hpp"
#include "knotlib/knotspec.hpp"
#include "knotlib/skein.hpp"
#include "knotlib/solver.hpp"
#include "knotlib/verify.hpp"

using namespace knotlib;
using nlohmann::json;

namespace {

json poly_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json rec;
        if (c.fits_slong_p())
            rec["c"] = c.get_si();
        else
            rec["c"] = c.get_str();
        rec["t2"] = m.t2;
        rec["q"] = m.q;
        rec["a"] = m.a;
        rec["r"] = m.r;
        terms.push_back(rec);
    }
    return terms;
}

// Table of a single atom that the toolkit knows to be thin, with its
// signature.
HomologyTable atom_table(const std::string& atom, const std::string& data_dir) {
    if (atom == "unknot") return HomologyTable(LaurentPoly::one());
    if (atom == "trefoil") return torus_t2(3);
    if (atom.rfind("T(", 0) == 0) {
        auto comma = atom.find(',');
        int p = std::stoi(atom.substr(2, comma - 2));
        int q = std::stoi(atom.substr(comma + 1, atom.size() - comma - 2));
        if (std::abs(p) == 2) std::swap(p, q);
        if (std::abs(q) != 2)
            throw std::invalid_argument(
                "only (l,2) torus knots have a bundled closed-form table");
        if (std::abs(p) == 1) return HomologyTable(LaurentPoly::one());
        HomologyTable t = torus_t2(std::abs(p));
        return (p < 0) != (q < 0) ? mirror_table(t) : t;
    }
    // named two-bridge knots: reconstruct from the bundled diagram
    Diagram d = resolve_atom(atom, data_dir);
    return kr_thin(homflypt(d), signature(d));
}

HomologyTable expr_table(const ExprNode& e, const std::string& data_dir) {
    switch (e.kind) {
        case ExprNode::Kind::Atom:
            return atom_table(e.name, data_dir);
        case ExprNode::Kind::Mirror:
            return mirror_table(expr_table(e.children.at(0), data_dir));
        case ExprNode::Kind::Sum: {
            HomologyTable t = expr_table(e.children.at(0), data_dir);
            for (size_t i = 1; i < e.children.size(); ++i)
                t = connected_sum(t, expr_table(e.children[i], data_dir));
            return t;
        }
    }
    throw std::logic_error("unreachable");
}

void print_table(const HomologyTable& t, bool as_json, bool grid, std::ostream& os) {
    if (as_json) {
        os << poly_json(t.dims()).dump() << "\n";
    } else if (grid) {
        LaurentPoly tq;
        for (const auto& [m, c] : t.dims().terms())
            tq.add_term(mono(m.t2, m.q + 0 * m.a, 0, 0), c);
        if (t.dims().has_a())
            os << "(grid shows t and q degrees only; a-degrees suppressed)\n";
        os << HomologyTable(tq).grid();
    } else {
        os << t.dims().str() << "\n";
    }
}

void print_bounds(const BoundTable& b, const std::vector<int>& ns, bool as_json,
                  std::ostream& os) {
    for (int N : ns) {
        XnSet x = xn_set(b, N);
        if (as_json) {
            os << bounds_json(x, N) << "\n";
        } else {
            RatInterval iv = sn_interval(x, N);
            os << "s_" << N << " in " << iv.str();
            if (x.is_upper_bound_source) os << "   (from an upper-bound table)";
            os << "\n";
        }
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic knot polynomial and concordance toolkit"};
    app.require_subcommand(1);
    std::string data_dir = "data";
    app.add_option("--data", data_dir, "data directory (bundled PD codes)");

    // poly
    auto* poly = app.add_subcommand("poly", "skein polynomial invariants");
    std::string poly_expr;
    int poly_sln = 0;
    bool poly_homfly = false, poly_kauffman = false, poly_json_out = false;
    size_t poly_limit = 16;
    poly->add_option("expr", poly_expr, "knot expression")->required();
    poly->add_flag("--homflypt", poly_homfly, "two-variable polynomial (default)");
    poly->add_option("--sln", poly_sln, "sl_N specialisation for this N");
    poly->add_flag("--kauffman", poly_kauffman, "state-sum sl_2 oracle");
    poly->add_flag("--json", poly_json_out);
    poly->add_option("--max-crossings", poly_limit);

    // homology
    auto* hom = app.add_subcommand("homology", "reduced homology tables");
    std::string hom_expr;
    int hom_torus = 0, hom_sigma = 0;
    bool hom_thin = false, hom_grid = false, hom_json = false, hom_hopf = false;
    hom->add_option("expr", hom_expr, "expression over thin atoms");
    hom->add_option("--torus", hom_torus, "closed form for the (l,2) torus knot");
    hom->add_flag("--thin", hom_thin,
                  "treat the whole expression as one thin knot diagram");
    hom->add_option("--sigma", hom_sigma, "signature for --thin");
    hom->add_flag("--hopf-rr", hom_hopf, "totally reduced table of the Hopf link");
    hom->add_flag("--grid", hom_grid);
    hom->add_flag("--json", hom_json);

    // bounds
    auto* bnd = app.add_subcommand("bounds", "X_N sets and s_N intervals");
    std::string bnd_expr;
    int bnd_n = 0, bnd_pretzel = 0;
    bool bnd_json = false;
    bnd->add_option("expr", bnd_expr, "expression over thin atoms");
    bnd->add_option("--sN,--N", bnd_n, "one N (default: 2..8)");
    bnd->add_option("--les-pretzel", bnd_pretzel,
                    "bound chain for the (l,2-l,2) pretzel");
    bnd->add_flag("--json", bnd_json);

    // les
    auto* les = app.add_subcommand("les", "skein long-exact-sequence pipelines");
    std::string les_expr, les_named;
    bool les_plus = false, les_minus = false, les_json = false;
    int les_pretzel = 0, les_pretzel4 = 0, les_sigma = 0;
    bool les_have_sigma = false;
    les->add_option("expr", les_expr, "table expression for the other knot");
    les->add_flag("--plus", les_plus, "bound the switched-positive knot");
    les->add_flag("--minus", les_minus, "bound the switched-negative knot");
    les->add_option("--pretzel", les_pretzel, "chain for P(l,2-l,2)");
    les->add_option("--pretzel4", les_pretzel4, "chain for P(l,2-l,4)");
    les->add_option("--named", les_named, "chain from the bundled chain data");
    les->add_option("--sigma", les_sigma)->each([&](const std::string&) {
        les_have_sigma = true;
    });
    les->add_flag("--json", les_json);

    // decomp
    auto* dec = app.add_subcommand("decomp", "decomposition searches");
    std::string dec_expr;
    int dec_n = 2, dec_alpha = 0, dec_beta = 0, dec_sprime = 0;
    bool dec_weak = false, dec_main = false, dec_published = false, dec_json = false;
    long dec_budget = 1000000;
    dec->add_option("expr", dec_expr, "expression over thin atoms");
    dec->add_flag("--weakness", dec_weak);
    dec->add_flag("--main-chain", dec_main);
    dec->add_flag("--published-pretzel", dec_published,
                  "use the published (5,-3,2) pretzel table");
    dec->add_option("--N", dec_n)->required();
    dec->add_option("--alpha", dec_alpha);
    dec->add_option("--beta", dec_beta);
    dec->add_option("--sprime", dec_sprime);
    dec->add_option("--budget", dec_budget);
    dec->add_flag("--json", dec_json);

    // solve
    auto* sol = app.add_subcommand("solve", "constraint propagation");
    std::string sol_file, sol_invariant, sol_query;
    bool sol_with_values = false;
    sol->add_option("file", sol_file, "constraint file")->required();
    sol->add_option("--invariant", sol_invariant, "invariant name to propagate");
    sol->add_option("--query", sol_query, "\"<invariant> <knot>\" to print");
    sol->add_flag("--with-values", sol_with_values,
                  "also load the imported value file");

    // verify
    auto* ver = app.add_subcommand("verify", "run the acceptance suite");
    unsigned ver_seed = 20130927;
    ver->add_option("--seed", ver_seed, "seed for the randomised criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
    }

    SkeinLimits lim;
    lim.max_crossings = poly_limit;

    if (poly->parsed()) {
        Diagram d = resolve_expr(parse_knot_expr(poly_expr), data_dir);
        LaurentPoly p;
        if (poly_kauffman)
            p = kauffman_sl2(d, lim);
        else if (poly_sln > 0)
            p = sln_poly(d, poly_sln, lim);
        else
            p = homflypt(d, lim);
        std::cout << (poly_json_out ? poly_json(p).dump() : p.str()) << "\n";
        return 0;
    }

    if (hom->parsed()) {
        HomologyTable t;
        if (hom_hopf) {
            t = hopf_rr();
        } else if (hom_torus != 0) {
            t = torus_t2(hom_torus);
        } else if (hom_thin) {
            if (!hom->count("--sigma"))
                throw std::invalid_argument("--thin requires --sigma");
            Diagram d = resolve_expr(parse_knot_expr(hom_expr), data_dir);
            t = kr_thin(homflypt(d, lim), hom_sigma);
        } else if (!hom_expr.empty()) {
            t = expr_table(parse_knot_expr(hom_expr), data_dir);
        } else {
            throw std::invalid_argument("homology: give an expression or --torus");
        }
        print_table(t, hom_json, hom_grid, std::cout);
        return 0;
    }

    if (bnd->parsed()) {
        std::vector<int> ns;
        if (bnd_n)
            ns.push_back(bnd_n);
        else
            for (int N = 2; N <= 8; ++N) ns.push_back(N);
        BoundTable b = bnd_pretzel
                           ? [&] {
                                 HomologyTable kp = connected_sum(
                                     torus_t2(bnd_pretzel),
                                     mirror_table(torus_t2(bnd_pretzel - 2)));
                                 return les_bound_minus(BoundTable(kp), hopf_rr());
                             }()
                           : BoundTable(expr_table(parse_knot_expr(bnd_expr), data_dir));
        if (bnd_pretzel && !bnd_json)
            std::cout << "bound table for P(" << bnd_pretzel << ","
                      << 2 - bnd_pretzel << ",2):\n";
        print_bounds(b, ns, bnd_json, std::cout);
        return 0;
    }

    if (les->parsed()) {
        BoundTable b{HomologyTable(LaurentPoly::one())};
        if (les_pretzel) {
            HomologyTable kp = connected_sum(torus_t2(les_pretzel),
                                             mirror_table(torus_t2(les_pretzel - 2)));
            b = les_bound_minus(BoundTable(kp), hopf_rr());
        } else if (les_pretzel4) {
            HomologyTable kp = connected_sum(torus_t2(les_pretzel4),
                                             mirror_table(torus_t2(les_pretzel4 - 2)));
            b = les_bound_minus(les_bound_minus(BoundTable(kp), hopf_rr()), hopf_rr());
        } else if (!les_named.empty()) {
            std::ifstream in(data_dir + "/chains.txt");
            if (!in) throw std::invalid_argument("no chain data bundled");
            std::string line, found;
            while (std::getline(in, line))
                if (line.rfind(les_named + ":", 0) == 0) found = line;
            if (found.empty())
                throw std::invalid_argument("no chain named '" + les_named + "'");
            std::istringstream rest(found.substr(found.find(':') + 1));
            std::string tok, base_name, steps;
            int sigma = 0;
            while (rest >> tok) {
                if (tok == "base") rest >> base_name;
                if (tok == "sigma") rest >> sigma;
                if (tok == "steps") rest >> steps;
            }
            Diagram base = resolve_atom(base_name, data_dir);
            b = BoundTable(kr_thin(homflypt(base, lim), sigma));
            std::istringstream ss(steps);
            while (std::getline(ss, tok, ','))
                b = tok == "plus" ? les_bound_plus(b, hopf_rr())
                                  : les_bound_minus(b, hopf_rr());
        } else {
            if (!(les_plus ^ les_minus))
                throw std::invalid_argument("les: choose exactly one of --plus/--minus");
            HomologyTable other =
                les_have_sigma
                    ? kr_thin(homflypt(resolve_expr(parse_knot_expr(les_expr), data_dir),
                                       lim),
                              les_sigma)
                    : expr_table(parse_knot_expr(les_expr), data_dir);
            b = les_plus ? les_bound_plus(BoundTable(other), hopf_rr())
                         : les_bound_minus(BoundTable(other), hopf_rr());
        }
        if (les_json) {
            std::cout << poly_json(b.table().dims()).dump() << "\n";
        } else {
            std::cout << "bound table: " << b.table().dims().str() << "\n";
            std::vector<int> ns;
            for (int N = 2; N <= 8; ++N) ns.push_back(N);
            print_bounds(b, ns, false, std::cout);
        }
        return 0;
    }

    if (dec->parsed()) {
        if (dec_weak == dec_main)
            throw std::invalid_argument("decomp: choose one of --weakness/--main-chain");
        SearchBudget budget{dec_budget};
        HomologyTable t = dec_published
                              ? pretzel_5m3_2_published()
                              : expr_table(parse_knot_expr(dec_expr), data_dir);
        SearchResult res =
            dec_weak ? weakness_decomp(t.dims(), dec_n, dec_alpha, dec_beta, budget)
                     : main_chain_feasible(t, dec_n, dec_sprime, budget);
        switch (res.status) {
            case SearchStatus::found: {
                if (dec_json) {
                    json w;
                    for (const auto& [name, p] : res.decomp.witnesses)
                        w[name] = poly_json(p);
                    std::cout << json{{"status", "found"}, {"witnesses", w}}.dump()
                              << "\n";
                } else {
                    std::cout << "found a decomposition:\n";
                    for (const auto& [name, p] : res.decomp.witnesses)
                        if (!p.is_zero())
                            std::cout << "  " << name << " = " << p.str() << "\n";
                }
                return 0;
            }
            case SearchStatus::infeasible:
                std::cout << (dec_json ? "{\"status\": \"infeasible\"}"
                                       : "proven infeasible")
                          << "\n";
                return 1;
            case SearchStatus::budget_exhausted:
                std::cout << (dec_json ? "{\"status\": \"budget_exhausted\"}"
                                       : "search budget exhausted (undecided)")
                          << "\n";
                return 1;
        }
    }

    if (sol->parsed()) {
        std::ifstream in(sol_file);
        if (!in) throw std::invalid_argument("cannot open " + sol_file);
        std::stringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        if (sol_with_values) {
            std::ifstream vf(data_dir + "/values.constraints");
            if (vf) {
                std::stringstream vbuf;
                vbuf << vf.rdbuf();
                text += "\n" + vbuf.str();
            }
        }
        std::vector<Constraint> cs = parse_constraints(text);
        std::string inv = sol_invariant;
        std::string query_expr;
        if (!sol_query.empty()) {
            std::istringstream qs(sol_query);
            qs >> inv;
            std::getline(qs, query_expr);
        }
        if (inv.empty())
            throw std::invalid_argument("solve: give --invariant or --query");
        Assignment a = propagate(cs, inv);
        if (!query_expr.empty()) {
            KnotExpr e = flatten_expr(parse_knot_expr(query_expr));
            RatInterval v = eval_expr(e, a);
            if (v.is_point())
                std::cout << inv << "(" << expr_str(e) << ") = " << rat_str(v.lo())
                          << "\n";
            else
                std::cout << inv << "(" << expr_str(e) << ") in " << v.str() << "\n";
        } else {
            for (const auto& [atom, iv] : a.intervals)
                std::cout << inv << "(" << atom << ") in " << iv.str() << "\n";
        }
        return 0;
    }

    if (ver->parsed()) {
        verify::Options vopt;
        vopt.data_dir = data_dir;
        vopt.seed = ver_seed;
        return verify::run_all(vopt, std::cout) ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const contradiction_error& e) {
        std::cerr << "contradiction: " << e.what() << "\n";
        return 1;
    } catch (const skein_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
