#include "knotlib/decomp.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace knotlib {

std::optional<LaurentPoly> page_step_check(const LaurentPoly& e_k,
                                           const LaurentPoly& e_k1,
                                           const Monomial& d_deg) {
    return exact_div_by_one_plus(e_k - e_k1, d_deg);
}

std::optional<std::vector<LaurentPoly>> page_sequence_check(const PageSequence& s) {
    if (s.pages.size() < 2 || s.diff_degrees.size() + 1 != s.pages.size())
        throw std::invalid_argument("page_sequence_check: size mismatch");
    std::vector<LaurentPoly> fs;
    for (size_t k = 0; k + 1 < s.pages.size(); ++k) {
        auto f = page_step_check(s.pages[k], s.pages[k + 1], s.diff_degrees[k]);
        if (!f) return std::nullopt;
        fs.push_back(std::move(*f));
    }
    return fs;
}

LaurentPoly first_page(const LaurentPoly& reduced, int N) {
    if (reduced.has_a() || reduced.has_r())
        throw std::domain_error("first_page: reduced table must live in t and q");
    return quantum_int(N, QVar::qr) * reduced;
}

LaurentPoly first_page(const HomologyTable& reduced, int N) {
    return first_page(reduced.dims(), N);
}

namespace {

class budget_exhausted : public std::exception {};

// Backtracking unit-assignment search for
//   p = remainder + sum_k (1 + divisors[k]) parts[k],  everything >= 0.
// The least monomial of the remaining polynomial is assigned unit by unit,
// nondecreasing in the branch index while the monomial stays the same.
// Branch 0 is the free remainder when allowed.
class DecompSearch {
  public:
    DecompSearch(std::vector<Monomial> divisors, bool allow_remainder, long nodes)
        : divisors_(std::move(divisors)),
          allow_remainder_(allow_remainder),
          nodes_(nodes) {
        for (const auto& d : divisors_)
            if (!(Monomial{} < d) || d.t2 <= 0)
                throw std::invalid_argument("divisor must have positive t-degree");
    }

    using Callback = std::function<bool(const std::vector<LaurentPoly>& parts,
                                        const LaurentPoly& remainder)>;

    // Returns true if the callback accepted some complete decomposition.
    bool run(const LaurentPoly& p, const Callback& cb) {
        parts_.assign(divisors_.size(), LaurentPoly::zero());
        remainder_ = LaurentPoly::zero();
        return recurse(p, 0, Monomial{}, cb);
    }

    long nodes_left() const { return nodes_; }

  private:
    bool recurse(const LaurentPoly& rem, int min_branch, const Monomial& last,
                 const Callback& cb) {
        if (--nodes_ < 0) throw budget_exhausted();
        if (rem.is_zero()) return cb(parts_, remainder_);
        auto [u, c] = *rem.terms().begin();
        if (c < 0) return false;
        int lo = (u == last) ? min_branch : 0;
        int nb = static_cast<int>(divisors_.size()) + 1;
        for (int b = lo; b < nb; ++b) {
            if (b == 0) {
                if (!allow_remainder_) continue;
                remainder_.add_term(u, 1);
                LaurentPoly next = rem;
                next.add_term(u, -1);
                if (recurse(next, 0, u, cb)) return true;
                remainder_.add_term(u, -1);
            } else {
                const Monomial& d = divisors_[b - 1];
                if (rem.coeff(u * d) < 1) continue;
                parts_[b - 1].add_term(u, 1);
                LaurentPoly next = rem;
                next.add_term(u, -1);
                next.add_term(u * d, -1);
                if (recurse(next, b, u, cb)) return true;
                parts_[b - 1].add_term(u, -1);
            }
        }
        return false;
    }

    std::vector<Monomial> divisors_;
    bool allow_remainder_;
    long nodes_;
    std::vector<LaurentPoly> parts_;
    LaurentPoly remainder_;
};

// divisor indices k for which some monomial pair (u, u*d_k) exists in p
std::vector<int> useful_ks(const LaurentPoly& p,
                           const std::function<Monomial(int)>& dk, int k_max) {
    std::vector<int> out;
    for (int k = 1; k <= k_max; ++k) {
        Monomial d = dk(k);
        for (const auto& [m, c] : p.terms())
            if (p.coeff(m * d) != 0) {
                out.push_back(k);
                break;
            }
    }
    return out;
}

void verify_decomposition(const LaurentPoly& input, const LaurentPoly& remainder,
                          const std::vector<Monomial>& divisors,
                          const std::vector<LaurentPoly>& parts) {
    LaurentPoly sum = remainder;
    for (size_t k = 0; k < divisors.size(); ++k)
        sum += parts[k] + parts[k].shifted(divisors[k]);
    if (!(sum == input))
        throw std::logic_error("decomposition failed to reproduce its input");
}

}  // namespace

SearchResult weakness_decomp(const LaurentPoly& A, int N, int alpha, int beta,
                             SearchBudget budget) {
    if (N < 1) throw std::domain_error("weakness_decomp: N must be >= 1");
    if (!A.nonnegative()) throw std::domain_error("weakness_decomp: A must be >= 0");
    SearchResult res;
    Monomial anchor = mono(0, alpha, beta);
    LaurentPoly rest = A - LaurentPoly::from_mono(anchor);
    if (!rest.nonnegative()) return res;  // anchor not present: proven infeasible

    std::vector<Monomial> divisors;
    for (int k = 0; k < N; ++k) divisors.push_back(mono(2, 2 * k, -2));
    DecompSearch search(divisors, false, budget.nodes);
    try {
        bool ok = search.run(rest, [&](const std::vector<LaurentPoly>& parts,
                                       const LaurentPoly& remainder) {
            verify_decomposition(rest, remainder, divisors, parts);
            for (int k = 0; k < N; ++k)
                res.decomp.witnesses["i" + std::to_string(k)] = parts[k];
            res.decomp.anchor = anchor;
            return true;
        });
        res.status = ok ? SearchStatus::found : SearchStatus::infeasible;
    } catch (const budget_exhausted&) {
        res.status = SearchStatus::budget_exhausted;
    }
    return res;
}

SearchResult main_chain_feasible(const HomologyTable& h_inf, int N, int s_prime,
                                 SearchBudget budget) {
    if (N < 2) throw std::domain_error("main_chain_feasible: N must be >= 2");
    if (s_prime % 2 != 0)
        throw std::domain_error("main_chain_feasible: s' must be even");
    const LaurentPoly& H = h_inf.dims();
    if (H.has_r()) throw std::domain_error("main_chain_feasible: r-free table required");

    SearchResult res;
    long nodes = budget.nodes;

    auto df = [&](int k) { return mono(2, 2 * N * k, -2 * k); };
    int kf_max = H.is_zero() ? 0 : std::max(0, (H.max_t2() - H.min_t2()) / 2);
    std::vector<int> fks = useful_ks(H, df, kf_max);
    std::vector<Monomial> f_divs;
    for (int k : fks) f_divs.push_back(df(k));

    std::vector<Monomial> g_divs;
    for (int k = 1; k < N; ++k) g_divs.push_back(mono(2, 0, 0, 2 * k));

    LaurentPoly target = quantum_int(N, QVar::q).shifted(mono_q(s_prime));

    try {
        DecompSearch fsearch(f_divs, true, nodes);
        bool ok = fsearch.run(H, [&](const std::vector<LaurentPoly>& fparts,
                                     const LaurentPoly& R) {
            LaurentPoly e1 = quantum_int(N, QVar::qr) * R.substitute_a(N);
            DecompSearch gsearch(g_divs, true, fsearch.nodes_left());
            bool gok;
            try {
                gok = gsearch.run(e1, [&](const std::vector<LaurentPoly>& gparts,
                                          const LaurentPoly& P) {
                    LaurentPoly rest = P.substitute_r_one() - target;
                    if (!rest.nonnegative()) return false;
                    auto dh = [&](int k) { return mono(2, -2 * N * k, 0); };
                    int kh_max =
                        rest.is_zero() ? 0 : std::max(0, (rest.max_t2() - rest.min_t2()) / 2);
                    std::vector<int> hks = useful_ks(rest, dh, kh_max);
                    std::vector<Monomial> h_divs;
                    for (int k : hks) h_divs.push_back(dh(k));
                    DecompSearch hsearch(h_divs, false, gsearch.nodes_left());
                    bool hok = hsearch.run(
                        rest, [&](const std::vector<LaurentPoly>& hparts,
                                  const LaurentPoly& hrem) {
                            verify_decomposition(rest, hrem, h_divs, hparts);
                            auto& w = res.decomp.witnesses;
                            for (size_t j = 0; j < fks.size(); ++j)
                                w["f" + std::to_string(fks[j])] = fparts[j];
                            for (int k = 1; k < N; ++k)
                                w["g" + std::to_string(k)] = gparts[k - 1];
                            for (size_t j = 0; j < hks.size(); ++j)
                                w["h" + std::to_string(hks[j])] = hparts[j];
                            w["stable_remainder"] = R;
                            w["unreduced_remainder"] = P;
                            return true;
                        });
                    return hok;
                });
            } catch (const budget_exhausted&) {
                throw;
            }
            return gok;
        });
        res.status = ok ? SearchStatus::found : SearchStatus::infeasible;
        if (ok) res.decomp.anchor = mono_q(s_prime);
    } catch (const budget_exhausted&) {
        res.status = SearchStatus::budget_exhausted;
    }
    return res;
}

}  // namespace knotlib
