#pragma once

// Brute-force oracles: primitive solutions in a box, point counts over F_p,
// residue-class censuses, and generators of instances with known solutions.

#include "thue/forms.hpp"
#include "thue/padic.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thue {

using IntPair = std::pair<mpz_class, mpz_class>;

struct SearchBox {
    long B = 1;
};

// 10^4 for n <= 6, 10^3 above.
long default_box(int n);

struct SolutionSet {
    std::string instance_id;
    std::vector<IntPair> solutions;  // lexicographic
    long B = 0;
    bool exhaustive = true;  // every primitive solution with max(|x|, |y|) <= B is listed
};

// threads = 0 uses the hardware concurrency.
SolutionSet primitive_solutions(const ThueInstance& inst, SearchBox box, unsigned threads = 0,
                                const std::string& instance_id = "");

// #{(x, y) in F_p^2 : F(x, y) = h}.
long count_affine_points_mod_p(const ThueInstance& inst, long p);

// #{P in P^1(F_p) : F(P) = 0}.
long count_roots_p1(const BinaryForm& F, long p);

// True when h z^n = F(x, y) is smooth mod p: p does not divide h or n and
// F is squarefree over the algebraic closure of F_p.
bool smooth_mod_p(const ThueInstance& inst, long p);

struct ProjectiveCount {
    long count = 0;
    long affine = 0;
    long at_infinity = 0;
    bool weil_ok = false;        // (N - p - 1)^2 <= 4 g^2 p
    bool projection_ok = false;  // N <= (n - 1)(p + 1) whenever N > 0
};

// Points of h z^n = F(x, y) over F_p. Throws CaseMismatch when the curve is
// not smooth mod p; projection_point_bound is the fallback then.
ProjectiveCount count_projective_smooth(const ThueInstance& inst, long p);

struct CensusEntry {
    mpz_class a, b;
    int argmax = -1;
    int block = -1;  // index into the disk partition
    Valuation t;
    std::vector<mpz_class> ubar;  // (a - alpha_rep b)/p^t mod p, coordinates over F_q
    mpz_class bbar;
    bool fiber_ok = true;  // h/p^w matches the reduced product at (ubar, bbar)
};

struct Census {
    mpz_class p;
    bool residue_granularity = true;  // false: classes only up to (disk, t)
    std::vector<CensusEntry> entries;
    long class_count = 0;
    std::optional<char> prime_case;        // a..d when p > n
    std::optional<long> class_bound;  // s p in case b, s n p in case d
    bool within_bound = true;
    bool fiber_identity_ok = true;
    std::vector<std::vector<int>> blocks;
};

// solutions must solve inst; F needs a unit x^n coefficient at p when
// tracked is given. Without tracked roots the census keys on the valuation
// profile and t only.
Census residue_class_census(const ThueInstance& inst, const std::vector<IntPair>& solutions, const mpz_class& p,
                            const TrackedRoots* tracked);

struct FamilyInstance {
    ThueInstance inst;
    std::vector<mpz_class> a_list;
    std::vector<IntPair> certified;
};

// F = prod (x - a_i y) + h y^n with certified (a_i, 1), and (-a_i, -1) for n even.
FamilyInstance example_family(const std::vector<mpz_class>& a_list, const mpz_class& h);

// a_1 := q^{n-1}, h := prod_{i >= 2} (1 - a_i q); (1, q) is certified as well.
FamilyInstance example_family_extra(std::vector<mpz_class> a_list, const mpz_class& q);

struct IntTriple {
    mpz_class x, y, z;
};

enum class OtherSet { S, T };

struct SetMembership {
    IntTriple point;       // primitive representative
    OtherSet set;
    int index = 0;         // i in S_i or T_i
    mpz_class target_h;    // h p^{-in} for S_i, h p^{in} for T_i
    IntTriple image;       // the matching point on h' z^n = F(x, y)
};

// Points of h z^n = F(x, y) split by p-adic position: p not dividing z with
// min(v(x), v(y)) = i gives S_i; v(z) = i > 0 gives T_i. Throws InvalidInput
// for the zero triple or a point off the curve.
std::vector<SetMembership> classify_S_T(const ThueInstance& inst, const std::vector<IntTriple>& points,
                                        const mpz_class& p);

}  // namespace thue
