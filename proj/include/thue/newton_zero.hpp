#pragma once

// Zero counting for p-adic series lambda(z) = a_0 + sum_{m>=1} a_m p^m z^m / m
// through the valuations of the a_m alone.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace thue {

struct CoeffValuationSeq {
    mpz_class p;
    std::vector<std::optional<int>> vals;  // v(a_0..a_M); nullopt is +infinity
    int tail_floor = 0;                    // v(a_m) >= tail_floor for m > M
};

enum class ZeroBranch { p_divides_I_plus_1, p_not_divides };

struct ZeroBoundReport {
    int I = 0;
    int J = 0;
    int bound = 0;
    ZeroBranch branch = ZeroBranch::p_not_divides;
};

// rho(x) = x - log_p x > c, decided exactly as p^{x - c} > x.
bool compare_rho_gt(const mpz_class& x, const mpq_class& c, const mpz_class& p);
double rho_display(const mpz_class& x, const mpz_class& p);  // display only

// v(a_m p^m / m); for m = 0 this is v(a_0).
int term_valuation(int m, int v_am, const mpz_class& p);

// Least m with v(a_m) = 0. Throws NotFoundWithinTruncation.
int I_invariant(const CoeffValuationSeq& seq);

// Least m whose term valuation is strictly below every later one; indices
// beyond the truncation are bounded below by (M+1) - floor(log_p(M+1)).
int J_invariant(const CoeffValuationSeq& seq);

ZeroBoundReport zero_bound(const CoeffValuationSeq& seq);

// Truncation length max(p^2, 2g + 4).
int default_truncation(const mpz_class& p, int g);

// floor(|U| + (p - 1)(2g - 2)/(p - 2)); needs p > 2 and p^2 > 2g + 1.
mpz_class chabauty_aggregate_bound(const mpz_class& U_size, int g, const mpz_class& p);

// floor(q - 1 + 2g(sqrt(q) + 1)).
mpz_class coleman_bound(const mpz_class& q, int g);

// Rank zero: |X(K)| is at most the number of smooth special-fibre points.
inline mpz_class rank_zero_bound(const mpz_class& ns_points) { return ns_points; }

}  // namespace thue
