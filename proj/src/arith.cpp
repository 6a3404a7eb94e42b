#include "thue/arith.hpp"

#include "thue/errors.hpp"

#include <numeric>

namespace thue {

int vp(const mpz_class& x, const mpz_class& p) {
    if (x == 0) throw InvalidInput("valuation of zero");
    mpz_class t = x;
    return static_cast<int>(mpz_remove(t.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

int vp(long long x, long long p) {
    return vp(mpz_class(std::to_string(x)), mpz_class(std::to_string(p)));
}

int vp(const mpq_class& x, const mpz_class& p) {
    return vp(mpz_class(x.get_num()), p) - vp(mpz_class(x.get_den()), p);
}

bool is_prime(const mpz_class& n) {
    return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_prime(long long n) {
    return is_prime(mpz_class(std::to_string(n)));
}

int euler_phi(int n) {
    int r = n;
    for (int q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        while (n % q == 0) n /= q;
        r -= r / q;
    }
    if (n > 1) r -= r / n;
    return r;
}

int floor_log(const mpz_class& x, const mpz_class& p) {
    int k = 0;
    mpz_class pk = p;
    while (pk <= x) {
        pk *= p;
        ++k;
    }
    return k;
}

mpz_class ipow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

mpz_class mod(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace thue
