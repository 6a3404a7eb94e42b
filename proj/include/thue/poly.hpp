#pragma once

// Dense univariate polynomials over Z and Q, lowest degree first.

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace thue {

using IntPoly = std::vector<mpz_class>;
using RatPoly = std::vector<mpq_class>;

// Drops high zero coefficients. The zero polynomial is the empty vector.
void trim(IntPoly& f);
void trim(RatPoly& f);

int degree(const IntPoly& f);  // -1 for zero
int degree(const RatPoly& f);

RatPoly to_rat(const IntPoly& f);

// Clears denominators and content; leading coefficient positive.
IntPoly primitive_part(const RatPoly& f);
IntPoly primitive_part(const IntPoly& f);
mpz_class content(const IntPoly& f);

IntPoly derivative(const IntPoly& f);
RatPoly derivative(const RatPoly& f);

IntPoly mul(const IntPoly& a, const IntPoly& b);
RatPoly mul(const RatPoly& a, const RatPoly& b);
IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly pow(const IntPoly& f, int e);

// Quotient and remainder over Q. Throws on division by zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// Exact division over Z; throws IdentityViolation if b does not divide a.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

// Monic gcd over Q.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

mpz_class eval(const IntPoly& f, const mpz_class& x);

// f(x + c)
IntPoly taylor_shift(const IntPoly& f, const mpz_class& c);

// Determinant of an integer matrix by fraction-free elimination.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m);

mpz_class resultant(const IntPoly& a, const IntPoly& b);

// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f)
mpq_class discriminant(const IntPoly& f);

// Unique polynomial of degree < xs.size() through the points. Exact.
RatPoly interpolate(const std::vector<mpz_class>& xs, const std::vector<mpq_class>& ys);

struct SquarefreeFactor {
    IntPoly factor;  // primitive, positive leading coefficient, degree >= 1
    int multiplicity;
};

// Yun's algorithm over Q. Product of factor^multiplicity equals f up to a
// rational constant.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& f);

}  // namespace thue
