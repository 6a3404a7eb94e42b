#include "thue/newton_zero.hpp"

#include "thue/arith.hpp"
#include "thue/errors.hpp"

#include <algorithm>
#include <cmath>

namespace thue {

bool compare_rho_gt(const mpz_class& x, const mpq_class& c, const mpz_class& p) {
    if (x < 1) throw InvalidInput("rho needs x >= 1");
    // x - log_p x > c  <=>  p^{x - c} > x  <=>  p^{num} > x^{den}
    mpq_class diff = mpq_class(x) - c;
    diff.canonicalize();
    const mpz_class num = diff.get_num(), den = diff.get_den();
    if (num <= 0) return false;  // p^{x-c} <= 1 <= x
    return ipow(p, num.get_ui()) > ipow(x, den.get_ui());
}

double rho_display(const mpz_class& x, const mpz_class& p) {
    return x.get_d() - std::log(x.get_d()) / std::log(p.get_d());
}

int term_valuation(int m, int v_am, const mpz_class& p) {
    if (m == 0) return v_am;
    return m + v_am - vp(mpz_class(m), p);
}

int I_invariant(const CoeffValuationSeq& seq) {
    for (std::size_t m = 0; m < seq.vals.size(); ++m)
        if (seq.vals[m] && *seq.vals[m] == 0) return static_cast<int>(m);
    throw NotFoundWithinTruncation("no unit coefficient within the truncation");
}

int J_invariant(const CoeffValuationSeq& seq) {
    const int I = I_invariant(seq);
    if (seq.p <= 2) throw InvalidInput("J needs p > 2");
    if (mpz_class(I) >= seq.p * seq.p - 2) throw InvalidInput("J needs I < p^2 - 2");
    const int M = static_cast<int>(seq.vals.size()) - 1;
    const int tail = (M + 1) - floor_log(mpz_class(M + 1), seq.p) + seq.tail_floor;
    // Suffix minimum of term valuations, the tail included.
    std::vector<long long> terms(M + 1);
    const long long INF = 1LL << 60;
    for (int m = 0; m <= M; ++m) terms[m] = seq.vals[m] ? term_valuation(m, *seq.vals[m], seq.p) : INF;
    long long later = tail;
    int J = -1;
    for (int m = M; m >= 0; --m) {
        if (terms[m] < later) J = m;
        later = std::min(later, terms[m]);
    }
    if (J < 0) throw NotFoundWithinTruncation("no index dominates the tail; extend the truncation");
    return J;
}

ZeroBoundReport zero_bound(const CoeffValuationSeq& seq) {
    if (seq.tail_floor < 0) throw InvalidInput("coefficients must be integral");
    for (const auto& v : seq.vals)
        if (v && *v < 0) throw InvalidInput("coefficients must be integral");
    ZeroBoundReport r;
    r.I = I_invariant(seq);
    r.J = J_invariant(seq);
    if ((r.I + 1) % seq.p == 0) {
        r.branch = ZeroBranch::p_divides_I_plus_1;
        r.bound = r.I + 1;
    } else {
        r.branch = ZeroBranch::p_not_divides;
        r.bound = r.I;
    }
    if (r.J > r.bound) throw IdentityViolation("J exceeds the branch bound");
    return r;
}

int default_truncation(const mpz_class& p, int g) {
    const mpz_class p2 = p * p;
    return std::max(static_cast<int>(p2.get_si()), 2 * g + 4);
}

mpz_class chabauty_aggregate_bound(const mpz_class& U_size, int g, const mpz_class& p) {
    if (p <= 2) throw InvalidInput("aggregate bound needs p > 2");
    if (p * p <= 2 * g + 1) throw InvalidInput("aggregate bound needs p^2 > 2g + 1");
    mpq_class v = mpq_class(U_size) + mpq_class((p - 1) * (2 * g - 2), p - 2);
    v.canonicalize();
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return fl;
}

mpz_class coleman_bound(const mpz_class& q, int g) {
    // 2g sqrt(q) floored exactly as isqrt(4 g^2 q).
    mpz_class r;
    mpz_class arg = 4 * mpz_class(g) * g * q;
    mpz_sqrt(r.get_mpz_t(), arg.get_mpz_t());
    return q - 1 + 2 * g + r;
}

}  // namespace thue
