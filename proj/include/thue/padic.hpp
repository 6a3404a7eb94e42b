#pragma once

// p-adic valuations of roots, root differences and a - alpha b.

#include "thue/forms.hpp"
#include "thue/poly.hpp"
#include "thue/residue_ring.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace thue {

// Normalized so that v(p) = 1; +infinity only for zero.
struct Valuation {
    bool infinite = false;
    mpq_class value = 0;

    static Valuation inf() { return Valuation{true, 0}; }
    static Valuation of(const mpq_class& v) { return Valuation{false, v}; }

    bool integral() const { return !infinite && value.get_den() == 1; }
    std::string str() const;  // "num/den" or "inf"
    static Valuation parse(const std::string& s);
};

bool operator==(const Valuation& a, const Valuation& b);
bool operator<(const Valuation& a, const Valuation& b);
inline bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
inline bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
inline bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
inline bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }
Valuation min(const Valuation& a, const Valuation& b);

Valuation valuation(const mpz_class& x, const mpz_class& p);
Valuation valuation(const mpq_class& x, const mpz_class& p);

struct NewtonSegment {
    mpq_class slope;
    int length;
};

// Lower hull of {(i, v_p(c_i))} over the nonzero coefficients.
std::vector<NewtonSegment> newton_polygon(const IntPoly& f, const mpz_class& p);

// Valuations of all roots with multiplicity, ascending (zero roots are inf).
std::vector<Valuation> root_valuations(const IntPoly& f, const mpz_class& p);

// R(x) = Res_y(f(y), f(x + y)) / x^s; its roots are alpha_j - alpha_i, i != j.
IntPoly difference_resolvent(const IntPoly& f);

// Multiset {v(alpha_i - alpha_j) : i != j} over the roots of the radical.
std::vector<Valuation> difference_valuations(const FormShape& shape, const mpz_class& p);

struct TrackedRoot {
    UnramRing::Elem value;
    int multiplicity;  // multiplicity as a root of F(x, 1)
    int part;          // index into FormShape::parts
};

// Roots of F(x, 1) in an unramified extension, to precision p^N.
struct TrackedRoots {
    mpz_class p;
    int N = 0;
    UnramRing ring{2, 1, IntPoly{0, 1}};
    std::vector<TrackedRoot> roots;

    // Pairwise v(r_i - r_j); diagonal entries are infinite.
    std::vector<std::vector<Valuation>> difference_matrix() const;
};

// Default working precision v_p(h) + v_p(disc(radical)) + 5.
int default_precision(const ThueInstance& inst, const mpz_class& p);

// Throws RamifiedCase when some root is not defined over an unramified
// extension of degree <= max_degree, and InvalidInput when the leading
// coefficient of a factor is divisible by p (monicize first) or N cannot
// separate the roots.
TrackedRoots hensel_track_roots(const FormShape& shape, const mpz_class& p, int N, int max_degree = 24);

struct RootValuation {
    Valuation v;         // v(a - alpha b)
    int multiplicity;    // n(alpha)
    int part;            // squarefree part the root belongs to
    int root_index = -1; // tracked mode only
};

struct SolutionValuationProfile {
    mpz_class a, b;
    std::vector<RootValuation> per_root;  // one entry per distinct finite root
    Valuation t;                          // maximum over per_root
    std::optional<int> argmax_index;      // tracked mode: smallest index attaining t
    bool tie = false;                     // t attained by more than one root
};

SolutionValuationProfile solution_valuations(const mpz_class& a, const mpz_class& b, const ThueInstance& inst,
                                             const mpz_class& p, const TrackedRoots* tracked = nullptr);

// For a coprime solution of F(a, b) = h with p | h and F(x, 1) of unit
// leading coefficient, v_p(b) = 0. Returns v_p(b) == 0.
bool check_vb_zero(const BinaryForm& F, const mpz_class& a, const mpz_class& b, const mpz_class& h,
                   const mpz_class& p);

}  // namespace thue
