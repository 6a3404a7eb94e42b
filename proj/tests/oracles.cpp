#include "oracles.hpp"

#include <numeric>
#include <stdexcept>

namespace oracle {

int vp(mpz_class x, const mpz_class& p) {
    if (x == 0) throw std::invalid_argument("vp(0)");
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

mpz_class powz(const mpz_class& b, unsigned e) {
    mpz_class r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

mpz_class eval_form(const std::vector<mpz_class>& c, const mpz_class& x, const mpz_class& y) {
    const unsigned n = c.size() - 1;
    mpz_class s = 0;
    for (unsigned i = 0; i <= n; ++i) s += c[i] * powz(x, n - i) * powz(y, i);
    return s;
}

std::vector<mpz_class> form_from_linear(const std::vector<Pair>& factors) {
    std::vector<mpz_class> c{1};
    for (const auto& [q, r] : factors) {
        std::vector<mpz_class> next(c.size() + 1, 0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k] += q * c[k];
            next[k + 1] -= r * c[k];
        }
        c = next;
    }
    return c;
}

mpq_class dstar_from_roots(const std::vector<Pair>& factors) {
    mpq_class c = 1;
    std::vector<mpq_class> roots;
    for (const auto& [q, r] : factors) {
        c *= q;
        roots.emplace_back(r, q);
        roots.back().canonicalize();
    }
    mpq_class prod = c;
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < roots.size(); ++j)
            if (i != j) prod *= roots[i] - roots[j];
    return prod;
}

std::vector<std::complex<long double>> complex_roots(const std::vector<long double>& f) {
    using C = std::complex<long double>;
    const int n = static_cast<int>(f.size()) - 1;
    std::vector<C> z(n);
    const C seed(0.4L, 0.9L);
    for (int i = 0; i < n; ++i) z[i] = std::pow(seed, i);
    auto eval = [&](C x) {
        C v = 0;
        for (int i = n; i >= 0; --i) v = v * x + f[i];
        return v / f[n];
    };
    for (int it = 0; it < 2000; ++it) {
        long double moved = 0;
        for (int i = 0; i < n; ++i) {
            C den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= z[i] - z[j];
            const C step = eval(z[i]) / den;
            z[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-16L) break;
    }
    return z;
}

std::vector<Pair> naive_solutions(const std::vector<mpz_class>& c, const mpz_class& h, long B) {
    std::vector<Pair> out;
    for (long x = -B; x <= B; ++x)
        for (long y = -B; y <= B; ++y) {
            if (std::gcd(x, y) != 1) continue;
            if (eval_form(c, x, y) == h) out.emplace_back(x, y);
        }
    return out;
}

long naive_affine_count(const std::vector<mpz_class>& c, const mpz_class& h, long p) {
    long count = 0;
    for (long x = 0; x < p; ++x)
        for (long y = 0; y < p; ++y)
            if ((eval_form(c, x, y) - h) % p == 0) ++count;
    return count;
}

namespace {

struct Descent {
    mpz_class p;
    int depth;
    long classes = 0;

    static int val(const mpz_class& x, const mpz_class& p, int cap) {
        if (x == 0) return cap;
        int v = 0;
        mpz_class y = x;
        while (v < cap && y % p == 0) {
            y /= p;
            ++v;
        }
        return v;
    }

    // g has coefficients known mod p^prec.
    void node(std::vector<mpz_class> g, int prec, int level) {
        int mu = prec;
        for (const auto& c : g) mu = std::min(mu, val(c, p, prec));
        if (mu >= prec) throw std::runtime_error("descent ran out of precision");
        int d = 0;
        for (int i = 0; i < static_cast<int>(g.size()); ++i)
            if (val(g[i], p, prec) == mu) d = i;
        const mpz_class pm = powz(p, mu);
        for (auto& c : g) c /= pm;
        prec -= mu;
        if (level == depth) {
            if (d >= 1) ++classes;
            return;
        }
        if (d == 0) return;
        const mpz_class mod = powz(p, prec);
        const long pl = p.get_si();
        std::vector<long> gbar;
        for (const auto& c : g) {
            mpz_class r = c % p;
            if (r < 0) r += p;
            gbar.push_back(r.get_si());
        }
        for (long z0 = 0; z0 < pl; ++z0) {
            long v = 0;
            for (int i = static_cast<int>(gbar.size()) - 1; i >= 0; --i) v = (v * z0 + gbar[i]) % pl;
            if (v != 0) continue;
            // child(w) = g(z0 + p w)
            std::vector<mpz_class> s = g;
            const int n = static_cast<int>(s.size()) - 1;
            for (int i = 0; i < n; ++i)
                for (int j = n - 1; j >= i; --j) s[j] += z0 * s[j + 1];
            mpz_class pi = 1;
            std::vector<mpz_class> child;
            for (int i = 0; i <= n; ++i, pi *= p) {
                if (i >= prec) break;
                mpz_class c = (s[i] * pi) % mod;
                if (c < 0) c += mod;
                child.push_back(c);
            }
            node(child, prec, level + 1);
        }
    }
};

}  // namespace

RootCount realized_root_classes(const std::vector<mpq_class>& coeffs, const mpz_class& p, int depth) {
    int mu = -1, d = 0;
    for (int i = 0; i < static_cast<int>(coeffs.size()); ++i) {
        if (coeffs[i] == 0) continue;
        const int v = vp(coeffs[i].get_num(), p) - vp(coeffs[i].get_den(), p);
        if (v < 0) throw std::invalid_argument("coefficients must be p-integral");
        if (mu < 0 || v < mu) {
            mu = v;
            d = i;
        } else if (v == mu) {
            d = i;
        }
    }
    if (mu < 0) throw std::invalid_argument("zero series");
    // Each level spends at most the Weierstrass degree of relative precision.
    const int prec = mu + depth * (d + 1) + 2;
    const mpz_class mod = powz(p, prec);
    std::vector<mpz_class> g;
    for (const auto& c : coeffs) {
        mpz_class inv;
        const mpz_class den = c.get_den();
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
        mpz_class r = (c.get_num() * inv) % mod;
        if (r < 0) r += mod;
        g.push_back(r);
    }
    while (g.size() > 1 && g.back() == 0) g.pop_back();
    Descent ds{p, depth};
    ds.node(g, prec, 0);
    return {ds.classes, d};
}

std::vector<mpq_class> lambda_coeffs(const std::vector<mpz_class>& a, const mpz_class& p) {
    std::vector<mpq_class> out;
    for (std::size_t m = 0; m < a.size(); ++m) {
        if (m == 0) {
            out.emplace_back(a[0]);
            continue;
        }
        mpq_class c(a[m] * powz(p, m), mpz_class(static_cast<unsigned long>(m)));
        c.canonicalize();
        out.push_back(c);
    }
    return out;
}

mpz_class random_unit(std::mt19937_64& rng, const mpz_class& p, int digits) {
    const long pl = p.get_si();
    std::uniform_int_distribution<long> first(1, pl - 1), any(0, pl - 1);
    mpz_class u = first(rng), pk = p;
    for (int i = 1; i < digits; ++i, pk *= p) u += any(rng) * pk;
    return u;
}

}  // namespace oracle
