#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace thue {

// v_p(x) for x != 0. Callers handle zero themselves.
int vp(const mpz_class& x, const mpz_class& p);
int vp(long long x, long long p);

// v_p of a nonzero rational.
int vp(const mpq_class& x, const mpz_class& p);

bool is_prime(const mpz_class& n);
bool is_prime(long long n);

int euler_phi(int n);

// floor(log_p(x)) for x >= 1.
int floor_log(const mpz_class& x, const mpz_class& p);

mpz_class ipow(const mpz_class& b, unsigned long e);

// Representative of x mod m in [0, m).
mpz_class mod(const mpz_class& x, const mpz_class& m);

}  // namespace thue
