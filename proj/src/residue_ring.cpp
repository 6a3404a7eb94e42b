#include "thue/residue_ring.hpp"

#include "thue/arith.hpp"
#include "thue/errors.hpp"

#include <algorithm>

namespace thue {

UnramRing::UnramRing(const mpz_class& p, int N, IntPoly m) : p_(p), N_(N), m_(std::move(m)) {
    ::thue::trim(m_);
    f_ = ::thue::degree(m_);
    if (f_ < 1 || m_.back() != 1) throw InvalidInput("defining polynomial must be monic of degree >= 1");
    if (N_ < 1) throw InvalidInput("precision must be positive");
    pN_ = ipow(p_, N_);
}

mpz_class UnramRing::field_size() const { return ipow(p_, f_); }

UnramRing::Elem UnramRing::from_int(const mpz_class& a) const {
    Elem e = zero();
    e[0] = mod(a, pN_);
    return e;
}

UnramRing::Elem UnramRing::from_index(mpz_class k) const {
    Elem e = zero();
    for (int i = 0; i < f_ && k > 0; ++i) {
        e[i] = mod(k, p_);
        k /= p_;
    }
    return e;
}

UnramRing::Elem UnramRing::reduce(const Elem& a) const {
    Elem r = a;
    r.resize(f_, 0);
    for (auto& c : r) c = mod(c, pN_);
    return r;
}

UnramRing::Elem UnramRing::add(const Elem& a, const Elem& b) const {
    Elem r(f_);
    for (int i = 0; i < f_; ++i) r[i] = mod(a[i] + b[i], pN_);
    return r;
}

UnramRing::Elem UnramRing::sub(const Elem& a, const Elem& b) const {
    Elem r(f_);
    for (int i = 0; i < f_; ++i) r[i] = mod(a[i] - b[i], pN_);
    return r;
}

UnramRing::Elem UnramRing::neg(const Elem& a) const { return sub(zero(), a); }

UnramRing::Elem UnramRing::mul(const Elem& a, const Elem& b) const {
    std::vector<mpz_class> t(2 * f_ - 1, 0);
    for (int i = 0; i < f_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < f_; ++j) t[i + j] += a[i] * b[j];
    }
    for (int i = 2 * f_ - 2; i >= f_; --i) {
        if (t[i] == 0) continue;
        const mpz_class c = t[i];
        for (int j = 0; j <= f_; ++j) t[i - f_ + j] -= c * m_[j];
    }
    Elem r(f_);
    for (int i = 0; i < f_; ++i) r[i] = mod(t[i], pN_);
    return r;
}

UnramRing::Elem UnramRing::scale(const Elem& a, const mpz_class& c) const {
    Elem r(f_);
    for (int i = 0; i < f_; ++i) r[i] = mod(a[i] * c, pN_);
    return r;
}

UnramRing::Elem UnramRing::pow(const Elem& a, const mpz_class& e) const {
    Elem result = one(), base = a;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

bool UnramRing::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](const mpz_class& c) { return c == 0; });
}

int UnramRing::val(const Elem& a) const {
    int v = N_;
    for (const auto& c : a)
        if (c != 0) v = std::min(v, vp(c, p_));
    return v;
}

UnramRing::Elem UnramRing::inverse(const Elem& a) const {
    if (!is_unit(a)) throw InvalidInput("inverse of a non-unit");
    Elem y = zero();
    if (f_ == 1) {
        mpz_class c = mod(a[0], p_);
        mpz_invert(y[0].get_mpz_t(), c.get_mpz_t(), p_.get_mpz_t());
    } else {
        // Inverse mod p by extended Euclid in F_p[X], then Newton lifting.
        const UnramRing Fp(p_, 1, IntPoly{0, 1});
        auto to_fp = [&](const IntPoly& g) {
            Poly r;
            for (const auto& c : g) r.push_back(Fp.from_int(c));
            Fp.trim(r);
            return r;
        };
        IntPoly ai(a.begin(), a.end());
        Poly r0 = to_fp(m_), r1 = to_fp(ai);
        Poly s0, s1{Fp.one()};
        while (!r1.empty()) {
            auto [q, r] = Fp.divmod(r0, r1);
            Poly s = Fp.sub(s0, Fp.mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        // r0 is a nonzero constant; the inverse is s0 / r0.
        const mpz_class c0 = r0[0][0];
        mpz_class cinv;
        mpz_invert(cinv.get_mpz_t(), c0.get_mpz_t(), p_.get_mpz_t());
        for (std::size_t i = 0; i < s0.size() && static_cast<int>(i) < f_; ++i) y[i] = mod(s0[i][0] * cinv, p_);
    }
    for (int prec = 1; prec < N_; prec *= 2) {
        Elem ay = mul(a, y);
        y = mul(y, sub(from_int(2), ay));
    }
    return y;
}

UnramRing::Elem UnramRing::div_p_power(const Elem& a, int e) const {
    if (e == 0) return a;
    const mpz_class pe = ipow(p_, e);
    Elem r(f_);
    for (int i = 0; i < f_; ++i) {
        if (a[i] % pe != 0) throw IdentityViolation("div_p_power: not divisible");
        r[i] = a[i] / pe;
    }
    return r;
}

void UnramRing::trim(Poly& f) const {
    while (!f.empty() && is_zero(f.back())) f.pop_back();
}

UnramRing::Poly UnramRing::lift(const IntPoly& f) const {
    Poly r;
    for (const auto& c : f) r.push_back(from_int(c));
    trim(r);
    return r;
}

UnramRing::Elem UnramRing::eval(const Poly& f, const Elem& x) const {
    Elem r = zero();
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = add(mul(r, x), *it);
    return r;
}

UnramRing::Poly UnramRing::derivative(const Poly& f) const {
    Poly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(scale(f[i], static_cast<unsigned long>(i)));
    trim(d);
    return d;
}

UnramRing::Poly UnramRing::mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    trim(r);
    return r;
}

UnramRing::Poly UnramRing::sub(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = add(r[i], a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
}

UnramRing::Poly UnramRing::taylor_shift(const Poly& f, const Elem& c) const {
    Poly r;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        Poly next(r.size() + 1, zero());
        for (std::size_t i = 0; i < r.size(); ++i) {
            next[i + 1] = add(next[i + 1], r[i]);
            next[i] = add(next[i], mul(r[i], c));
        }
        next[0] = add(next[0], *it);
        r = std::move(next);
    }
    trim(r);
    return r;
}

UnramRing::Poly UnramRing::shift_and_scale(const Poly& f, const Elem& c, int k) const {
    Poly r = taylor_shift(f, c);
    mpz_class pk = 1;
    const mpz_class step = ipow(p_, k);
    for (auto& coef : r) {
        coef = scale(coef, pk);
        pk *= step;
    }
    trim(r);
    return r;
}

UnramRing::Poly UnramRing::monic(const Poly& f) const {
    if (f.empty()) return f;
    const Elem inv = inverse(f.back());
    Poly r;
    for (const auto& c : f) r.push_back(mul(c, inv));
    return r;
}

std::pair<UnramRing::Poly, UnramRing::Poly> UnramRing::divmod(const Poly& a, const Poly& b) const {
    Poly num = a, den = b;
    trim(num);
    trim(den);
    if (den.empty()) throw InvalidInput("polynomial division by zero");
    if (num.size() < den.size()) return {Poly{}, num};
    const Elem inv = inverse(den.back());
    Poly q(num.size() - den.size() + 1, zero());
    for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
        if (is_zero(num[i])) continue;
        const Elem c = mul(num[i], inv);
        const int shift = i - (static_cast<int>(den.size()) - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] = sub(num[shift + j], mul(c, den[j]));
    }
    trim(q);
    trim(num);
    return {q, num};
}

UnramRing::Poly UnramRing::gcd(const Poly& a, const Poly& b) const {
    Poly x = a, y = b;
    trim(x);
    trim(y);
    while (!y.empty()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

UnramRing::Poly UnramRing::powmod(const Poly& base, const mpz_class& e, const Poly& m) const {
    Poly result{one()}, b = divmod(base, m).second;
    result = divmod(result, m).second;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = divmod(mul(result, b), m).second;
        b = divmod(mul(b, b), m).second;
        k >>= 1;
    }
    return result;
}

void UnramRing::split_linear(const Poly& h, std::vector<Elem>& out) const {
    const int d = static_cast<int>(h.size()) - 1;
    if (d <= 0) return;
    if (d == 1) {
        // h monic: x + h0
        out.push_back(neg(h[0]));
        return;
    }
    const mpz_class q = field_size();
    for (mpz_class k = 0;; ++k) {
        if (k >= q * q) throw IdentityViolation("equal-degree splitting did not terminate");
        // Deterministic splitting elements: x + delta, then delta * x + 1, etc.
        const Elem delta = from_index(k % q);
        const Elem lead = from_index(k / q + 1 < q ? k / q + 1 : mpz_class(1));
        Poly probe{delta, lead};
        Poly t;
        if (p_ == 2) {
            // Absolute trace map: sum_{i<f} probe^{2^i}.
            Poly acc;
            Poly term = divmod(probe, h).second;
            for (int i = 0; i < f_; ++i) {
                Poly sum(std::max(acc.size(), term.size()), zero());
                for (std::size_t j = 0; j < acc.size(); ++j) sum[j] = add(sum[j], acc[j]);
                for (std::size_t j = 0; j < term.size(); ++j) sum[j] = add(sum[j], term[j]);
                trim(sum);
                acc = std::move(sum);
                term = divmod(mul(term, term), h).second;
            }
            t = acc;
        } else {
            t = powmod(probe, (q - 1) / 2, h);
            t = sub(t, Poly{one()});
        }
        Poly g = gcd(h, t);
        const int dg = static_cast<int>(g.size()) - 1;
        if (dg > 0 && dg < d) {
            split_linear(g, out);
            split_linear(divmod(h, g).first, out);
            return;
        }
    }
}

std::vector<UnramRing::Root> UnramRing::roots(const Poly& f0) const {
    if (N_ != 1) throw InvalidInput("root finding needs the residue field");
    Poly f = f0;
    trim(f);
    if (f.empty()) throw InvalidInput("roots of the zero polynomial");
    std::vector<Root> out;
    if (f.size() == 1) return out;
    f = monic(f);
    const Poly x{zero(), one()};
    Poly xq = powmod(x, field_size(), f);
    Poly h = gcd(f, sub(xq, x));
    std::vector<Elem> vals;
    split_linear(h, vals);
    std::sort(vals.begin(), vals.end());
    for (const auto& r : vals) {
        int mult = 0;
        Poly g = f;
        const Poly lin{neg(r), one()};
        while (true) {
            auto [q, rem] = divmod(g, lin);
            if (!rem.empty()) break;
            ++mult;
            g = std::move(q);
        }
        out.push_back({r, mult});
    }
    return out;
}

IntPoly UnramRing::find_irreducible(const mpz_class& p, int f) {
    if (f == 1) return IntPoly{0, 1};
    const UnramRing Fp(p, 1, IntPoly{0, 1});
    std::vector<int> prime_divs;
    for (int r = 2, t = f; r <= t; ++r) {
        if (t % r) continue;
        prime_divs.push_back(r);
        while (t % r == 0) t /= r;
    }
    const mpz_class count = ipow(p, f);
    for (mpz_class k = 0; k < count; ++k) {
        IntPoly m(f + 1, 0);
        m[f] = 1;
        mpz_class t = k;
        for (int i = 0; i < f; ++i) {
            m[i] = mod(t, p);
            t /= p;
        }
        if (m[0] == 0) continue;
        Poly mp = Fp.lift(m);
        const Poly x{Fp.zero(), Fp.one()};
        // Rabin: x^{p^f} = x mod m and gcd(x^{p^{f/r}} - x, m) = 1.
        if (Fp.sub(Fp.powmod(x, ipow(p, f), mp), x).size() != 0) continue;
        bool ok = true;
        for (int r : prime_divs) {
            Poly g = Fp.gcd(mp, Fp.sub(Fp.powmod(x, ipow(p, f / r), mp), x));
            if (g.size() != 1) {
                ok = false;
                break;
            }
        }
        if (ok) return m;
    }
    throw IdentityViolation("no irreducible polynomial found");
}

UnramRing UnramRing::of_degree(const mpz_class& p, int N, int f) {
    return UnramRing(p, N, find_irreducible(p, f));
}

}  // namespace thue
