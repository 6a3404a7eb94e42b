#include "thue/fermat.hpp"

#include "thue/arith.hpp"
#include "thue/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace thue {

bool satisfies(const FermatTwist& tw, const SolutionTriple& t) {
    const unsigned long n = tw.n;
    return tw.A * ipow(t.x, n) + tw.B * ipow(t.y, n) == tw.C * ipow(t.z, n);
}

FermatTwist solve_ABC(const SolutionTriple& t1, const SolutionTriple& t2, int n) {
    if (n < 1) throw InvalidInput("n must be positive");
    const unsigned long e = n;
    const mpz_class r1[3] = {ipow(t1.x, e), ipow(t1.y, e), -ipow(t1.z, e)};
    const mpz_class r2[3] = {ipow(t2.x, e), ipow(t2.y, e), -ipow(t2.z, e)};
    mpz_class c[3] = {r1[1] * r2[2] - r1[2] * r2[1], r1[2] * r2[0] - r1[0] * r2[2], r1[0] * r2[1] - r1[1] * r2[0]};
    mpz_class g = gcd(gcd(c[0], c[1]), c[2]);
    if (g == 0) throw InvalidInput("triples are equivalent; the system has rank < 2");
    for (auto& x : c) x /= g;
    int sign = 1;
    for (int k : {2, 0, 1})
        if (c[k] != 0) {
            sign = c[k] < 0 ? -1 : 1;
            break;
        }
    FermatTwist tw{sign * c[0], sign * c[1], sign * c[2], n};
    if (!satisfies(tw, t1) || !satisfies(tw, t2)) throw IdentityViolation("solve_ABC: kernel vector fails");
    return tw;
}

bool equivalent(const SolutionTriple& t1, const SolutionTriple& t2, int n) {
    const unsigned long e = n;
    const mpz_class a[3] = {ipow(t1.x, e), ipow(t1.y, e), ipow(t1.z, e)};
    const mpz_class b[3] = {ipow(t2.x, e), ipow(t2.y, e), ipow(t2.z, e)};
    for (int i = 0; i < 3; ++i) {
        if ((a[i] == 0) != (b[i] == 0)) return false;
        for (int j = i + 1; j < 3; ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    }
    return true;
}

namespace {

mpz_class primitive_root_of_unity(const mpz_class& q, int n) {
    // g^{(q-1)/n} has order exactly n for a generator g.
    const mpz_class e = (q - 1) / n;
    for (mpz_class g = 2; g < q; ++g) {
        mpz_class z;
        mpz_powm(z.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
        bool ok = true;
        for (int d = 1; d < n && ok; ++d) {
            if (n % d) continue;
            mpz_class t;
            mpz_powm_ui(t.get_mpz_t(), z.get_mpz_t(), d, q.get_mpz_t());
            if (t == 1) ok = false;
        }
        if (ok) return z;
    }
    throw IdentityViolation("no primitive root of unity");
}

using ProjPt = std::tuple<mpz_class, mpz_class, mpz_class>;

ProjPt normalize(mpz_class x, mpz_class y, mpz_class z, const mpz_class& q) {
    x = mod(x, q);
    y = mod(y, q);
    z = mod(z, q);
    mpz_class lead = x != 0 ? x : y != 0 ? y : z;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), q.get_mpz_t());
    return {mod(x * inv, q), mod(y * inv, q), mod(z * inv, q)};
}

}  // namespace

OrbitReport orbit_count(const SolutionTriple& t, bool symmetric, int n, mpz_class q) {
    if (!t.nontrivial()) throw InvalidInput("orbit needs a nontrivial triple");
    const unsigned long e = n;
    const mpz_class diff = ipow(t.x, e) - ipow(t.y, e);
    const bool swap_distinct = symmetric && diff != 0;
    OrbitReport rep;
    rep.expected = static_cast<long>(n) * n * (swap_distinct ? 2 : 1);
    const mpz_class bad = t.x * t.y * t.z * (diff != 0 ? diff : mpz_class(1));
    if (q == 0) {
        for (q = n + 1;; q += n)
            if (is_prime(q) && bad % q != 0) break;
    } else if (!is_prime(q) || (q - 1) % n != 0 || bad % q == 0) {
        throw InvalidInput("q must be a prime = 1 mod n not dividing xyz(x^n - y^n)");
    }
    rep.q = q;
    rep.zeta = primitive_root_of_unity(q, n);
    std::set<ProjPt> pts;
    mpz_class zi = 1;
    for (int i = 0; i < n; ++i, zi = mod(zi * rep.zeta, q)) {
        mpz_class zj = 1;
        for (int j = 0; j < n; ++j, zj = mod(zj * rep.zeta, q)) {
            pts.insert(normalize(zi * t.x, zj * t.y, t.z, q));
            if (symmetric) pts.insert(normalize(zi * t.y, zj * t.x, t.z, q));
        }
    }
    rep.distinct = static_cast<long>(pts.size());
    return rep;
}

CorFermatReport cor_fermat_check(const FermatTwist& tw, const mpz_class& p, const RankHypothesis& hyp, long box) {
    if (!is_prime(p) || p < 3) throw InvalidInput("p must be an odd prime");
    if (tw.n != p - 1) throw InvalidInput("needs n = p - 1");
    if ((tw.A * tw.B) % p == 0) throw CaseMismatch("p divides AB; normalize the twist first");
    CorFermatReport rep;
    rep.p = p;
    rep.box = box;
    rep.hypothesis_asserted = hyp.implies_mw_below(mpq_class(p - 3, 2));
    const unsigned long e = tw.n;
    if (tw.C != 0) {
        for (long x = 1; x <= box; ++x) {
            const mpz_class ax = tw.A * ipow(mpz_class(x), e);
            for (long y = 1; y <= box; ++y) {
                if (std::gcd(x, y) != 1) continue;  // z^n is then coprime to both
                const mpz_class rhs = ax + tw.B * ipow(mpz_class(y), e);
                if (rhs % tw.C != 0) continue;
                const mpz_class zn = rhs / tw.C;
                if (zn <= 0) continue;
                mpz_class z;
                if (!mpz_root(z.get_mpz_t(), zn.get_mpz_t(), e)) continue;
                SolutionTriple t{x, y, z};
                bool fresh = true;
                for (const auto& c : rep.classes) fresh = fresh && !equivalent(c, t, tw.n);
                if (fresh) rep.classes.push_back(t);
                if (tw.A == tw.B && x != y) rep.symmetric_offdiagonal = true;
            }
        }
    }
    rep.rank_lower_bound = rep.classes.size() >= 2 || rep.symmetric_offdiagonal;
    rep.contradiction = rep.rank_lower_bound && rep.hypothesis_asserted;
    if (rep.rank_lower_bound)
        rep.conclusion = "Mordell-Weil rank over Q >= (p-3)/2";
    else
        rep.conclusion = "consistent with at most one solution class; no conclusion";
    return rep;
}

InfiniteOrderReport infinite_order_construction(const SolutionTriple& t1, const mpz_class& q, int n) {
    if (!is_prime(q) || q <= 2) throw InvalidInput("q must be an odd prime");
    const mpz_class guard = t1.x * t1.y * t1.z * (t1.x - t1.y) * (t1.x - t1.z) * (t1.y - t1.z);
    if (guard % q == 0) throw InvalidInput("q divides x1 y1 z1 (x1-y1)(x1-z1)(y1-z1)");
    InfiniteOrderReport rep;
    rep.t2 = {t1.x + q, t1.y + q, t1.z + q};
    rep.twist = solve_ABC(t1, rep.t2, n);
    rep.coprime = gcd(gcd(rep.twist.A, rep.twist.B), rep.twist.C) == 1;
    rep.q_divides_ABC = (rep.twist.A * rep.twist.B * rep.twist.C) % q == 0;
    rep.both_satisfy = satisfies(rep.twist, t1) && satisfies(rep.twist, rep.t2);
    rep.asserted = {"good reduction at q follows from q not dividing nABC",
                    "P - Q reduces to zero mod q by construction",
                    "the kernel of reduction has no torsion for q > 2, so P - Q has infinite order"};
    return rep;
}

QuotientPoint quotient_map(const FermatTwist& tw, mpq_class x, mpq_class y, int a, int b) {
    if (a < 0 || b < 0) throw InvalidInput("exponents must be nonnegative");
    x.canonicalize();
    y.canonicalize();
    const mpq_class lhs_twist = tw.A * [&] {
        mpq_class r = 1;
        for (int i = 0; i < tw.n; ++i) r *= x;
        return r;
    }();
    mpq_class yn = 1;
    for (int i = 0; i < tw.n; ++i) yn *= y;
    if (lhs_twist + tw.B * yn != mpq_class(tw.C)) throw InvalidInput("point is not on the twist (z = 1 chart)");
    auto qpow = [](const mpq_class& v, int e) {
        mpq_class r = 1;
        for (int i = 0; i < e; ++i) r *= v;
        return r;
    };
    QuotientPoint out;
    out.d = std::gcd(std::gcd(tw.n, a), b);
    if (out.d == 0) out.d = tw.n;
    out.X = qpow(x, tw.n);
    out.Y = qpow(x, a) * qpow(y, b);
    const mpq_class lhs = qpow(mpq_class(tw.B), b / out.d) * qpow(out.Y, tw.n / out.d);
    const mpq_class rhs = qpow(out.X, a / out.d) * qpow(tw.C - tw.A * out.X, b / out.d);
    out.on_quotient = lhs == rhs;
    if (!out.on_quotient) throw IdentityViolation("quotient image misses the quotient curve");
    return out;
}

}  // namespace thue
