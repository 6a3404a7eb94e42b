#pragma once

// Integer binary forms and the curve invariants of hz^n = F(x, y).

#include "thue/poly.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace thue {

struct BinaryForm {
    int n = 0;
    std::vector<mpz_class> coeffs;  // coeffs[i] multiplies x^{n-i} y^i

    static BinaryForm from_coeffs(std::vector<mpz_class> c);
    mpz_class eval(const mpz_class& x, const mpz_class& y) const;
    IntPoly dehomogenize() const;  // F(x, 1), lowest degree first
    std::string str() const;
};

struct FormShape {
    int s = 0;
    std::vector<int> multiplicities;  // one per distinct finite root, grouped by part
    mpz_class c;                      // leading coefficient of F(x, 1)
    IntPoly radical;                  // squarefree part of F(x, 1), primitive
    int degree_deficit = 0;           // multiplicity of the root at infinity
    // Squarefree decomposition of F(x, 1); every root of parts[k].factor has
    // multiplicity parts[k].multiplicity. Roots are indexed part by part.
    std::vector<SquarefreeFactor> parts;
};

FormShape factor_shape(const BinaryForm& F);

// Distinct points of P^1 cut out by F: finite roots plus infinity if y | F.
int projective_root_count(const FormShape& shape);

int genus(const FormShape& shape, int n);

mpq_class dstar(const FormShape& shape);

bool is_irreducible_model(const FormShape& shape, int n, const mpz_class& h);

struct Monicized {
    mpz_class u;
    BinaryForm F;  // F(x, y + u x)
};

// Smallest u in [0, p) making the x^n coefficient of F(x, y + ux) a p-unit.
Monicized monicize(const BinaryForm& F, const mpz_class& p);

struct ThueInstance {
    BinaryForm F;  // unit content
    mpz_class h;
    FormShape shape;
    int g = 0;
    mpq_class dstar;
    bool irreducible = false;
    mpz_class content_divisor = 1;  // content removed from the raw input
};

// Divides F and h by the content of F (which must divide h), then computes
// the invariants. Throws InvalidInput for h = 0, zero F, or content not
// dividing h. A reducible model is allowed here; the genus is then left at 0.
ThueInstance make_instance(const BinaryForm& raw, const mpz_class& h);

}  // namespace thue
