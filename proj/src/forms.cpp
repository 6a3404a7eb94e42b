#include "thue/forms.hpp"

#include "thue/arith.hpp"
#include "thue/errors.hpp"

#include <numeric>
#include <sstream>

namespace thue {

BinaryForm BinaryForm::from_coeffs(std::vector<mpz_class> c) {
    if (c.size() < 2) throw InvalidInput("a binary form needs degree >= 1");
    bool any = false;
    for (const auto& x : c) any = any || x != 0;
    if (!any) throw InvalidInput("zero form");
    BinaryForm F;
    F.n = static_cast<int>(c.size()) - 1;
    F.coeffs = std::move(c);
    return F;
}

mpz_class BinaryForm::eval(const mpz_class& x, const mpz_class& y) const {
    // Homogeneous Horner: sum c_i x^{n-i} y^i.
    mpz_class r = 0, ypow = 1;
    for (int i = 0; i <= n; ++i) {
        r = r * x + coeffs[i] * ypow;
        ypow *= y;
    }
    return r;
}

IntPoly BinaryForm::dehomogenize() const {
    IntPoly f(n + 1);
    for (int i = 0; i <= n; ++i) f[n - i] = coeffs[i];
    trim(f);
    return f;
}

std::string BinaryForm::str() const {
    std::ostringstream os;
    for (int i = 0; i <= n; ++i) os << (i ? "," : "") << coeffs[i].get_str();
    return os.str();
}

FormShape factor_shape(const BinaryForm& F) {
    FormShape sh;
    IntPoly f = F.dehomogenize();
    if (f.empty()) throw InvalidInput("zero form");
    const int d = degree(f);
    sh.degree_deficit = F.n - d;
    sh.c = f[d];
    if (d == 0) {
        sh.radical = IntPoly{1};
        return sh;
    }
    sh.parts = squarefree_decomposition(f);
    IntPoly rad{1};
    for (const auto& part : sh.parts) {
        const int k = degree(part.factor);
        sh.s += k;
        for (int j = 0; j < k; ++j) sh.multiplicities.push_back(part.multiplicity);
        rad = mul(rad, part.factor);
    }
    sh.radical = primitive_part(rad);
    return sh;
}

int projective_root_count(const FormShape& shape) {
    return shape.s + (shape.degree_deficit > 0 ? 1 : 0);
}

int genus(const FormShape& shape, int n) {
    const int s = projective_root_count(shape);
    long long sum = 0;
    for (int m : shape.multiplicities) sum += std::gcd(n, m);
    if (shape.degree_deficit > 0) sum += std::gcd(n, shape.degree_deficit);
    const long long two_g_minus_2 = static_cast<long long>(n) * (s - 2) - sum;
    if (two_g_minus_2 % 2 != 0) throw InvalidInput("genus formula gives odd 2g-2");
    const long long g = two_g_minus_2 / 2 + 1;
    if (g < 0) throw InvalidInput("genus formula gives negative genus");
    return static_cast<int>(g);
}

mpq_class dstar(const FormShape& shape) {
    if (shape.s <= 1) return mpq_class(shape.c);
    const int s = shape.s;
    mpq_class r = discriminant(shape.radical);
    const mpz_class lc = shape.radical.back();
    r /= mpq_class(ipow(lc, 2 * s - 2));
    if ((s * (s - 1) / 2) % 2 != 0) r = -r;
    return r * shape.c;
}

bool is_irreducible_model(const FormShape& shape, int n, const mpz_class& h) {
    if (h == 0) throw InvalidInput("h must be nonzero");
    int g = n;
    for (int m : shape.multiplicities) g = std::gcd(g, m);
    g = std::gcd(g, shape.degree_deficit);
    return g == 1;
}

Monicized monicize(const BinaryForm& F, const mpz_class& p) {
    if (p <= F.n) throw InvalidInput("monicize needs p > n");
    for (mpz_class u = 0; u < p; ++u) {
        // The x^n coefficient of F(x, y + ux) is F(1, u).
        if (F.eval(1, u) % p == 0) continue;
        Monicized out;
        out.u = u;
        out.F.n = F.n;
        out.F.coeffs.assign(F.n + 1, 0);
        // F(x, y+ux) = sum_i c_i x^{n-i} (y + ux)^i; the y^j part of
        // (y + ux)^i lands in coefficient slot j.
        for (int i = 0; i <= F.n; ++i) {
            mpz_class binom = 1;
            for (int j = 0; j <= i; ++j) {
                out.F.coeffs[j] += F.coeffs[i] * binom * ipow(u, i - j);
                binom = binom * (i - j) / (j + 1);
            }
        }
        return out;
    }
    throw IdentityViolation("monicize: no admissible u although p > n");
}

ThueInstance make_instance(const BinaryForm& raw, const mpz_class& h) {
    if (h == 0) throw InvalidInput("h must be nonzero");
    mpz_class d = 0;
    for (const auto& c : raw.coeffs) d = gcd(d, c);
    if (d == 0) throw InvalidInput("zero form");
    if (h % d != 0)
        throw InvalidInput("content " + d.get_str() + " of F does not divide h; no primitive solutions");
    ThueInstance inst;
    inst.F = raw;
    for (auto& c : inst.F.coeffs) c /= d;
    inst.h = h / d;
    inst.content_divisor = d;
    inst.shape = factor_shape(inst.F);
    inst.irreducible = is_irreducible_model(inst.shape, inst.F.n, inst.h);
    if (inst.irreducible) inst.g = genus(inst.shape, inst.F.n);
    inst.dstar = dstar(inst.shape);
    return inst;
}

}  // namespace thue
