#pragma once

// Truncated rings of integers of unramified extensions of Q_p:
// (Z/p^N)[X]/(m) with m monic and irreducible mod p. With N = 1 this is the
// residue field F_q, q = p^deg(m).

#include "thue/poly.hpp"

#include <gmpxx.h>

#include <vector>

namespace thue {

class UnramRing {
public:
    using Elem = std::vector<mpz_class>;  // exactly degree() coefficients
    using Poly = std::vector<Elem>;       // lowest degree first, trimmed

    UnramRing(const mpz_class& p, int N, IntPoly m);

    // Lexicographically smallest monic irreducible of degree f over F_p.
    static IntPoly find_irreducible(const mpz_class& p, int f);
    static UnramRing of_degree(const mpz_class& p, int N, int f);

    UnramRing with_precision(int N) const { return UnramRing(p_, N, m_); }

    const mpz_class& p() const { return p_; }
    const mpz_class& modulus() const { return pN_; }
    int precision() const { return N_; }
    int degree() const { return f_; }
    const IntPoly& defining_poly() const { return m_; }
    mpz_class field_size() const;  // q = p^f

    Elem zero() const { return Elem(f_, 0); }
    Elem one() const { return from_int(1); }
    Elem from_int(const mpz_class& a) const;
    // Element of F_q (or its Teichmuller-free lift) with base-p digits of k as
    // coefficients; enumerates F_q as k runs over [0, q).
    Elem from_index(mpz_class k) const;
    Elem reduce(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, const mpz_class& c) const;
    Elem pow(const Elem& a, const mpz_class& e) const;

    bool is_zero(const Elem& a) const;
    bool is_unit(const Elem& a) const { return val(a) == 0; }
    // min over coefficients of v_p, capped at N (N means "zero mod p^N").
    int val(const Elem& a) const;
    Elem inverse(const Elem& a) const;  // a must be a unit
    // a / p^e, requires val(a) >= e; digits above N - e are not meaningful.
    Elem div_p_power(const Elem& a, int e) const;

    // Polynomials over the ring.
    void trim(Poly& f) const;
    Poly lift(const IntPoly& f) const;
    Elem eval(const Poly& f, const Elem& x) const;
    Poly derivative(const Poly& f) const;
    Poly mul(const Poly& a, const Poly& b) const;
    Poly sub(const Poly& a, const Poly& b) const;
    Poly taylor_shift(const Poly& f, const Elem& c) const;  // f(x + c)
    // f(c + p^k x)
    Poly shift_and_scale(const Poly& f, const Elem& c, int k) const;

    // Field-only operations (precision 1).
    Poly monic(const Poly& f) const;
    std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
    Poly gcd(const Poly& a, const Poly& b) const;
    Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod) const;
    // Distinct roots in F_q with their multiplicities in f.
    struct Root {
        Elem value;
        int multiplicity;
    };
    std::vector<Root> roots(const Poly& f) const;

private:
    mpz_class p_, pN_;
    int N_;
    IntPoly m_;
    int f_;

    void split_linear(const Poly& h, std::vector<Elem>& out) const;
};

}  // namespace thue
