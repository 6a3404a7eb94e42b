#pragma once

// Point-count bounds for hz^n = F(x, y) and the arithmetic around them.

#include "thue/forms.hpp"
#include "thue/poly.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace thue {

enum class CaseTag { a, b, c, d };
char case_letter(CaseTag t);

struct PrimeCase {
    mpz_class p;
    bool divides_h = false;
    bool divides_dstar = false;
    CaseTag tag = CaseTag::a;
};

// Needs p > n.
PrimeCase classify_prime(const ThueInstance& inst, const mpz_class& p);

// Smallest prime in (n, 2n).
mpz_class bertrand_prime(int n);

enum class HypKind { none, chabauty_lt_g, mw_rank_value, mw_lt_threshold };
enum class HypField { rational, cyclotomic };

// A rank statement supplied by the user; never verified here.
//   chabauty_lt_g[:cyclotomic]   Chabauty rank < g (over Q, or Q(zeta_{p-1}))
//   mw_rank_value:r              Mordell-Weil rank over Q equals r
//   mw_lt_threshold:T            Mordell-Weil rank over Q is < T
struct RankHypothesis {
    HypKind kind = HypKind::none;
    std::optional<mpz_class> value;
    HypField field = HypField::rational;
    std::string source;  // the declaration as given

    static RankHypothesis parse(const std::string& decl);
    std::string str() const;

    // Chabauty rank over Q below g.
    bool implies_chabauty_lt_g(int g) const;
    // Mordell-Weil rank over Q below num/den.
    bool implies_mw_below(const mpq_class& bound) const;
};

enum class Quantity { X_Q, N_FhQp, N_Fh };
const char* quantity_name(Quantity q);

struct RationalBound {
    mpq_class value;
    mpz_class floor;
};
RationalBound make_bound(const mpq_class& v);

// (2g - 2)(p - 1)/(p - 2)
mpq_class chabauty_term(int g, const mpz_class& p);

RationalBound bound_pro1(int g, const mpz_class& p, const mpz_class& smooth_count);
RationalBound bound_pro2(int g, const mpz_class& p, int s);
RationalBound bound_pro3(int g, const mpz_class& p, const mpz_class& a_p);
RationalBound bound_pro4(int g, const mpz_class& p, int s, int n);

mpz_class thm_main_case_value(CaseTag tag, int n, int g, int s);
Quantity thm_main_case_quantity(CaseTag tag);
mpz_class thm_main_global(int n);

struct BoundEntry {
    std::string name;     // e.g. "thm_main.a", "pro2"
    std::string formula;  // human-readable formula
    Quantity quantity;
    RationalBound bound;
    bool applies = false;  // the declared hypothesis implies the needed one
    std::string condition;
};

struct BoundReport {
    std::string instance_id;
    int n = 0, g = 0, s = 0;
    PrimeCase prime_case;
    RankHypothesis hypothesis;
    std::vector<BoundEntry> entries;
    std::vector<std::string> findings;  // inequalities of the catalogue that fail here
    std::vector<std::string> notes;
};

// s counts distinct points of P^1 cut out by F.
BoundReport start_report(int n, int g, int s, const PrimeCase& pc, const RankHypothesis& hyp);

// Theorem-level bounds, case formula and global, for n < p < 2n.
void add_thm_main_bounds(BoundReport& rep);
BoundReport thm_main_bounds(int n, int g, int s, const PrimeCase& pc, const RankHypothesis& hyp);

// Proposition-level bounds at a prime p > n. Counts that are not supplied
// leave the corresponding entry out.
void add_proposition_bounds(BoundReport& rep, const std::optional<mpz_class>& smooth_count,
                            const std::optional<mpz_class>& affine_count);

struct CaseValue {
    std::string label;      // case label of the refinement
    std::string condition;  // divisibility condition in words
    std::string formula;
    Quantity quantity;
    mpz_class value;
};

// n >= 5 prime, a > 1, p = an + 1 prime.
std::vector<CaseValue> ref1_values(int n, int a);
// p >= 5 prime, n = p - 1.
std::vector<CaseValue> ref2_values(const mpz_class& p);

// Refinement entries matching the prime case, added to rep when the shape
// fits (n prime with p = an + 1, or n = p - 1).
void add_refinement_bounds(BoundReport& rep);

mpz_class projection_point_bound(int n, const mpz_class& p, bool has_point);

// phi(t)^{s-2} / prod (t^{gcd(n, n_i)} - 1)/(t - 1), phi = (t^n - 1)/(t - 1).
// multiplicities include the root at infinity when present. Throws
// InvalidInput when the division is not exact or sum n_i is not 0 mod n.
IntPoly sigma_char_poly(int n, const std::vector<int>& multiplicities);

// phi(d)(s - 2)/2; throws InvalidInput if not an integer or d does not divide n.
int dim_Ad(int n, int d, int s);

mpq_class pro_dim_threshold(int s);

}  // namespace thue
