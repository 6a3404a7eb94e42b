#include "thue/poly.hpp"

#include "thue/errors.hpp"

#include <algorithm>

namespace thue {

void trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

void trim(RatPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const IntPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

int degree(const RatPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

RatPoly to_rat(const IntPoly& f) {
    RatPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    return r;
}

mpz_class content(const IntPoly& f) {
    mpz_class g = 0;
    for (const auto& c : f) g = gcd(g, c);
    return g;
}

IntPoly primitive_part(const IntPoly& f) {
    IntPoly r = f;
    trim(r);
    if (r.empty()) return r;
    mpz_class g = content(r);
    if (r.back() < 0) g = -g;
    for (auto& c : r) c /= g;
    return r;
}

IntPoly primitive_part(const RatPoly& f) {
    RatPoly g = f;
    trim(g);
    mpz_class den = 1;
    for (const auto& c : g) den = lcm(den, mpz_class(c.get_den()));
    IntPoly r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        mpq_class v = g[i] * den;
        r[i] = v.get_num();
    }
    return primitive_part(r);
}

IntPoly derivative(const IntPoly& f) {
    if (f.size() <= 1) return {};
    IntPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<unsigned long>(i);
    trim(d);
    return d;
}

RatPoly derivative(const RatPoly& f) {
    if (f.size() <= 1) return {};
    RatPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<unsigned long>(i);
    trim(d);
    return d;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

IntPoly pow(const IntPoly& f, int e) {
    IntPoly r{1};
    for (int i = 0; i < e; ++i) r = mul(r, f);
    return r;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    RatPoly num = a, den = b;
    trim(num);
    trim(den);
    if (den.empty()) throw InvalidInput("polynomial division by zero");
    if (num.size() < den.size()) return {RatPoly{}, num};
    RatPoly q(num.size() - den.size() + 1, 0);
    const mpq_class& lead = den.back();
    for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
        if (num[i] == 0) continue;
        mpq_class c = num[i] / lead;
        int shift = i - (static_cast<int>(den.size()) - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    trim(q);
    trim(num);
    return {q, num};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divmod(to_rat(a), to_rat(b));
    if (!r.empty()) throw IdentityViolation("exact_div: nonzero remainder");
    IntPoly out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i].get_den() != 1) throw IdentityViolation("exact_div: non-integral quotient");
        out[i] = q[i].get_num();
    }
    return out;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    trim(x);
    trim(y);
    while (!y.empty()) {
        auto r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return x;
    mpq_class lead = x.back();
    for (auto& c : x) c /= lead;
    return x;
}

mpz_class eval(const IntPoly& f, const mpz_class& x) {
    mpz_class r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly taylor_shift(const IntPoly& f, const mpz_class& c) {
    // Horner with polynomial accumulator: r <- r*(x+c) + f_i
    IntPoly r;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        IntPoly next(r.size() + 1, 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            next[i + 1] += r[i];
            next[i] += r[i] * c;
        }
        next[0] += *it;
        r = std::move(next);
    }
    trim(r);
    return r;
}

mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

mpz_class resultant(const IntPoly& a, const IntPoly& b) {
    const int da = degree(a), db = degree(b);
    if (da < 0 || db < 0) return 0;
    if (da == 0) return ::thue::pow(IntPoly{a[0]}, db)[0];
    if (db == 0) return ::thue::pow(IntPoly{b[0]}, da)[0];
    const int n = da + db;
    std::vector<std::vector<mpz_class>> s(n, std::vector<mpz_class>(n, 0));
    // Rows hold coefficients highest degree first.
    for (int r = 0; r < db; ++r)
        for (int i = 0; i <= da; ++i) s[r][r + i] = a[da - i];
    for (int r = 0; r < da; ++r)
        for (int i = 0; i <= db; ++i) s[db + r][r + i] = b[db - i];
    return bareiss_det(std::move(s));
}

mpq_class discriminant(const IntPoly& f) {
    const int d = degree(f);
    if (d < 1) throw InvalidInput("discriminant of a constant");
    if (d == 1) return 1;
    mpq_class r = resultant(f, derivative(f));
    r /= f[d];
    if ((d * (d - 1) / 2) % 2 != 0) r = -r;
    return r;
}

RatPoly interpolate(const std::vector<mpz_class>& xs, const std::vector<mpq_class>& ys) {
    const std::size_t n = xs.size();
    // Newton divided differences.
    std::vector<mpq_class> c(ys.begin(), ys.end());
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            c[i] = (c[i] - c[i - 1]) / mpq_class(xs[i] - xs[i - j]);
            if (i == j) break;
        }
    RatPoly r{c[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        // r <- r*(x - xs[k]) + c[k]
        RatPoly next(r.size() + 1, 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            next[i + 1] += r[i];
            next[i] -= r[i] * xs[k];
        }
        next[0] += c[k];
        r = std::move(next);
    }
    trim(r);
    return r;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& f) {
    std::vector<SquarefreeFactor> out;
    RatPoly a = to_rat(f);
    trim(a);
    if (degree(a) < 1) return out;
    RatPoly da = derivative(a);
    RatPoly a0 = gcd(a, da);
    RatPoly b = divmod(a, a0).first;
    RatPoly c = divmod(da, a0).first;
    RatPoly d;
    {
        RatPoly bd = derivative(b);
        d = c;
        d.resize(std::max(d.size(), bd.size()), 0);
        for (std::size_t i = 0; i < bd.size(); ++i) d[i] -= bd[i];
        trim(d);
    }
    int i = 1;
    while (degree(b) >= 1) {
        RatPoly ai = gcd(b, d);
        if (degree(ai) >= 1) out.push_back({primitive_part(ai), i});
        b = divmod(b, ai).first;
        c = divmod(d, ai).first;
        RatPoly bd = derivative(b);
        d = c;
        d.resize(std::max(d.size(), bd.size()), 0);
        for (std::size_t k = 0; k < bd.size(); ++k) d[k] -= bd[k];
        trim(d);
        ++i;
    }
    return out;
}

}  // namespace thue
