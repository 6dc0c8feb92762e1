// Decategorified spectral-sequence bookkeeping: consecutive-page checks,
// the reduced-to-unreduced first page, and backtracking searches for
// nonnegative decompositions p = remainder + sum_k (1 + d_k) f_k.
//
// Searches process monomials lowest-first in the canonical order; every
// divisor has positive homological degree, so the least remaining monomial
// must be consumed directly by some f_k (or the remainder), which makes an
// exhausted search a proof of nonexistence.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotlib/homology.hpp"
#include "knotlib/laurent.hpp"

namespace knotlib {

struct PageSequence {
    std::vector<LaurentPoly> pages;
    std::vector<Monomial> diff_degrees;  // degree of d_k between pages k, k+1
};

struct Decomposition {
    std::map<std::string, LaurentPoly> witnesses;
    Monomial anchor;
};

enum class SearchStatus { found, infeasible, budget_exhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::infeasible;
    Decomposition decomp;
};

struct SearchBudget {
    long nodes = 1000000;
};

// f with e_k = e_k1 + (1 + d_deg) f and f >= 0, if it exists.
std::optional<LaurentPoly> page_step_check(const LaurentPoly& e_k,
                                           const LaurentPoly& e_k1,
                                           const Monomial& d_deg);

// Each consecutive pair must check; returns the witnesses f_1 .. f_{n-1}.
std::optional<std::vector<LaurentPoly>> page_sequence_check(const PageSequence& s);

// [N]_{qr} * reduced, the first page of the reduced-to-unreduced sequence.
LaurentPoly first_page(const LaurentPoly& reduced, int N);
LaurentPoly first_page(const HomologyTable& reduced, int N);

// Search for A = q^alpha a^beta + sum_{k=0}^{N-1} (1 + t a^-2 q^2k) i_k with
// all i_k >= 0. Witness keys are "i0", "i1", ....
SearchResult weakness_decomp(const LaurentPoly& A, int N, int alpha, int beta,
                             SearchBudget budget = {});

// Feasibility of the full decomposition chain from a reduced table down to
// q^s' [N]_q: stage one splits off pairs of degree 1 + t q^{2Nk} a^{-2k}
// leaving a remainder, which is specialised at a = q^N and multiplied by
// [N]_{qr}; stage two splits pairs 1 + t r^{2k} (k < N); after r = 1 the
// last stage must consume everything above q^{s'} [N]_q with pairs
// 1 + t q^{-2Nk}.
SearchResult main_chain_feasible(const HomologyTable& h_inf, int N, int s_prime,
                                 SearchBudget budget = {});

}  // namespace knotlib
