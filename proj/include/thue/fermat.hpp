#pragma once

// Twists A x^n + B y^n = C z^n built from prescribed solutions.

#include "thue/bounds.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace thue {

struct FermatTwist {
    mpz_class A, B, C;
    int n = 0;
};

struct SolutionTriple {
    mpz_class x, y, z;
    bool nontrivial() const { return x != 0 && y != 0 && z != 0; }
};

bool satisfies(const FermatTwist& tw, const SolutionTriple& t);

// Primitive kernel of the rows (x_i^n, y_i^n, -z_i^n), normalized to C >= 0,
// then A >= 0, then B >= 0. Throws InvalidInput when the rows are dependent.
FermatTwist solve_ABC(const SolutionTriple& t1, const SolutionTriple& t2, int n);

// (x1^n, y1^n, z1^n) and (x2^n, y2^n, z2^n) proportional over Q.
bool equivalent(const SolutionTriple& t1, const SolutionTriple& t2, int n);

struct OrbitReport {
    long expected = 0;  // n^2, or 2n^2 with the swap when A = B and x^n != y^n
    long distinct = 0;  // projective points materialized over F_q
    mpz_class q;
    mpz_class zeta;  // primitive n-th root of unity mod q
};

// q = 0 picks the smallest prime q = 1 mod n not dividing xyz(x^n - y^n).
OrbitReport orbit_count(const SolutionTriple& t, bool symmetric, int n, mpz_class q = 0);

struct CorFermatReport {
    mpz_class p;
    long box = 0;
    std::vector<SolutionTriple> classes;  // one positive representative per class
    bool hypothesis_asserted = false;
    bool symmetric_offdiagonal = false;  // A = B and some class has x != y
    bool rank_lower_bound = false;       // search forces rank >= (p-3)/2
    bool contradiction = false;          // asserted hypothesis refuted by the search
    std::string conclusion;
};

// n = p - 1, p not dividing AB. Box search over 1 <= x, y <= box.
CorFermatReport cor_fermat_check(const FermatTwist& tw, const mpz_class& p, const RankHypothesis& hyp, long box);

struct InfiniteOrderReport {
    SolutionTriple t2;
    FermatTwist twist;
    bool coprime = false;
    bool q_divides_ABC = false;
    bool both_satisfy = false;
    std::vector<std::string> asserted;  // steps taken on trust (jacobian arithmetic)
};

InfiniteOrderReport infinite_order_construction(const SolutionTriple& t1, const mpz_class& q, int n);

struct QuotientPoint {
    mpq_class X, Y;
    int d = 1;
    bool on_quotient = false;
};

// (x : y : 1) -> (x^n, x^a y^b) onto B^{b/d} Y^{n/d} = X^{a/d} (C - A X)^{b/d}.
// Throws IdentityViolation when the image misses the quotient curve.
QuotientPoint quotient_map(const FermatTwist& tw, mpq_class x, mpq_class y, int a, int b);

}  // namespace thue
