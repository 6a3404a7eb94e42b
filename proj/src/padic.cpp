#include "thue/padic.hpp"

#include "thue/arith.hpp"
#include "thue/errors.hpp"

#include <algorithm>
#include <functional>

namespace thue {

std::string Valuation::str() const {
    if (infinite) return "inf";
    return mpz_class(value.get_num()).get_str() + "/" + mpz_class(value.get_den()).get_str();
}

Valuation Valuation::parse(const std::string& s) {
    if (s == "inf") return inf();
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InvalidInput("bad valuation: " + s);
    q.canonicalize();
    return of(q);
}

bool operator==(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
}

bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
}

Valuation min(const Valuation& a, const Valuation& b) { return b < a ? b : a; }

Valuation valuation(const mpz_class& x, const mpz_class& p) {
    if (x == 0) return Valuation::inf();
    return Valuation::of(vp(x, p));
}

Valuation valuation(const mpq_class& x, const mpz_class& p) {
    if (x == 0) return Valuation::inf();
    return Valuation::of(vp(x, p));
}

std::vector<NewtonSegment> newton_polygon(const IntPoly& f, const mpz_class& p) {
    struct Pt {
        long long x, y;
    };
    std::vector<Pt> pts;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0) pts.push_back({static_cast<long long>(i), vp(f[i], p)});
    if (pts.empty()) throw InvalidInput("Newton polygon of the zero polynomial");
    std::vector<Pt> hull;
    for (const auto& q : pts) {
        while (hull.size() >= 2) {
            const Pt& o = hull[hull.size() - 2];
            const Pt& a = hull.back();
            const long long cross = (a.x - o.x) * (q.y - o.y) - (a.y - o.y) * (q.x - o.x);
            if (cross > 0) break;
            hull.pop_back();
        }
        hull.push_back(q);
    }
    std::vector<NewtonSegment> segs;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        const long long dx = hull[i].x - hull[i - 1].x;
        mpq_class slope(static_cast<long>(hull[i].y - hull[i - 1].y), static_cast<unsigned long>(dx));
        slope.canonicalize();
        segs.push_back({slope, static_cast<int>(dx)});
    }
    return segs;
}

std::vector<Valuation> root_valuations(const IntPoly& f, const mpz_class& p) {
    std::vector<Valuation> out;
    std::size_t low = 0;
    while (low < f.size() && f[low] == 0) ++low;
    for (std::size_t i = 0; i < low; ++i) out.push_back(Valuation::inf());
    for (const auto& seg : newton_polygon(f, p))
        for (int k = 0; k < seg.length; ++k) out.push_back(Valuation::of(-seg.slope));
    std::sort(out.begin(), out.end());
    return out;
}

IntPoly difference_resolvent(const IntPoly& f) {
    const int d = degree(f);
    if (d < 2) return IntPoly{1};
    const int deg_total = d * d;
    std::vector<mpz_class> xs;
    std::vector<mpq_class> ys;
    for (int k = 0; k <= deg_total; ++k) {
        xs.emplace_back(k);
        ys.emplace_back(resultant(f, taylor_shift(f, k)));
    }
    RatPoly r = interpolate(xs, ys);
    for (int i = 0; i < d; ++i)
        if (i < static_cast<int>(r.size()) && r[i] != 0) throw IdentityViolation("resolvent not divisible by x^s");
    r.erase(r.begin(), r.begin() + std::min<std::size_t>(d, r.size()));
    for (const auto& c : r)
        if (c.get_den() != 1) throw IdentityViolation("resolvent has non-integral coefficients");
    return primitive_part(r);
}

std::vector<Valuation> difference_valuations(const FormShape& shape, const mpz_class& p) {
    if (shape.s < 2) return {};
    return root_valuations(difference_resolvent(shape.radical), p);
}

std::vector<std::vector<Valuation>> TrackedRoots::difference_matrix() const {
    const std::size_t k = roots.size();
    std::vector<std::vector<Valuation>> m(k, std::vector<Valuation>(k, Valuation::inf()));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) m[i][j] = Valuation::of(ring.val(ring.sub(roots[i].value, roots[j].value)));
    return m;
}

int default_precision(const ThueInstance& inst, const mpz_class& p) {
    int v = vp(inst.h, p);
    if (degree(inst.shape.radical) >= 2) v += vp(discriminant(inst.shape.radical), p);
    return v + 5;
}

namespace {

struct NeedExtension {};
struct NeedPrecision {};

// All roots of P in the unramified ring, each to precision at least N.
std::vector<UnramRing::Elem> track_factor(const IntPoly& P, const UnramRing& ring, int N) {
    using Elem = UnramRing::Elem;
    using Poly = UnramRing::Poly;
    const int M = ring.precision();
    const UnramRing field = ring.with_precision(1);
    const Poly Plift = ring.lift(P);
    std::vector<Elem> found;

    std::function<void(const Elem&, int)> explore = [&](const Elem& r, int k) {
        // G(z) = P(r + p^k z) / p^e
        Poly G = ring.shift_and_scale(Plift, r, k);
        int e = M;
        for (const auto& c : G) e = std::min(e, ring.val(c));
        if (e >= M - 1) throw NeedPrecision{};
        const UnramRing low = ring.with_precision(M - e);
        Poly H;
        for (const auto& c : G) H.push_back(low.reduce(ring.div_p_power(c, e)));
        low.trim(H);
        Poly Hbar;
        for (const auto& c : H) Hbar.push_back(field.reduce(c));
        field.trim(Hbar);
        const int expected = static_cast<int>(Hbar.size()) - 1;
        if (expected <= 0) return;
        const auto rts = field.roots(Hbar);
        int got = 0;
        for (const auto& rt : rts) got += rt.multiplicity;
        if (got < expected) throw NeedExtension{};
        const mpz_class pk = ipow(ring.p(), k);
        for (const auto& rt : rts) {
            if (rt.multiplicity > 1) {
                const std::size_t before = found.size();
                explore(ring.add(r, ring.scale(rt.value, pk)), k + 1);
                if (static_cast<int>(found.size() - before) != rt.multiplicity)
                    throw RamifiedCase("roots of a factor have fractional valuation differences");
                continue;
            }
            // Simple residue root: Newton iteration on H over Z/p^{M-e}.
            const Poly dH = low.derivative(H);
            Elem z = low.reduce(rt.value);
            for (int it = 0; it < 2 * M + 4; ++it) {
                const Elem hz = low.eval(H, z);
                if (low.is_zero(hz)) break;
                z = low.sub(z, low.mul(hz, low.inverse(low.eval(dH, z))));
            }
            if (!low.is_zero(low.eval(H, z))) throw IdentityViolation("Newton iteration did not converge");
            if (M - e + k < N) throw NeedPrecision{};
            found.push_back(ring.add(r, ring.scale(z, pk)));
        }
    };
    explore(ring.zero(), 0);
    return found;
}

}  // namespace

TrackedRoots hensel_track_roots(const FormShape& shape, const mpz_class& p, int N, int max_degree) {
    if (!is_prime(p)) throw InvalidInput("p must be prime");
    if (N < 1) throw InvalidInput("precision must be positive");
    int M = N + 8;
    for (const auto& part : shape.parts) {
        if (part.factor.back() % p == 0)
            throw InvalidInput("leading coefficient divisible by p; monicize the form first");
        const int d = degree(part.factor);
        const int dv = d >= 2 ? vp(discriminant(part.factor), p) : 0;
        M = std::max(M, N + d * (dv + 2) + 4);
    }
    for (int f = 1; f <= max_degree; ++f) {
        const IntPoly m = UnramRing::find_irreducible(p, f);
        for (int attempt = 0; attempt < 6; ++attempt, M *= 2) {
            const UnramRing ring(p, M, m);
            TrackedRoots out;
            out.p = p;
            out.N = N;
            out.ring = ring.with_precision(N);
            try {
                for (std::size_t k = 0; k < shape.parts.size(); ++k) {
                    const auto& part = shape.parts[k];
                    auto rts = track_factor(part.factor, ring, N);
                    if (static_cast<int>(rts.size()) != degree(part.factor))
                        throw RamifiedCase("lost roots while tracking a factor");
                    for (auto& r : rts)
                        out.roots.push_back({out.ring.reduce(r), part.multiplicity, static_cast<int>(k)});
                }
            } catch (const NeedExtension&) {
                break;
            } catch (const NeedPrecision&) {
                continue;
            }
            for (std::size_t k = 0; k < out.roots.size(); ++k) {
                const auto& part = shape.parts[out.roots[k].part];
                const auto val = out.ring.eval(out.ring.lift(part.factor), out.roots[k].value);
                if (!out.ring.is_zero(val)) throw IdentityViolation("tracked root is not a root mod p^N");
                for (std::size_t j = 0; j < k; ++j)
                    if (out.ring.is_zero(out.ring.sub(out.roots[k].value, out.roots[j].value)))
                        throw InvalidInput("precision N does not separate the roots");
            }
            return out;
        }
    }
    throw RamifiedCase("roots not found in unramified extensions of degree <= " + std::to_string(max_degree));
}

namespace {

// b^d P((a - T)/b) as a polynomial in T.
IntPoly shifted_factor(const IntPoly& P, const mpz_class& a, const mpz_class& b) {
    const int d = degree(P);
    IntPoly g;
    const IntPoly a_minus_T{a, -1};
    IntPoly pw{1};
    for (int i = 0; i <= d; ++i) {
        const mpz_class scale = P[i] * ipow(b, d - i);
        IntPoly term = pw;
        for (auto& c : term) c *= scale;
        g = add(g, term);
        pw = mul(pw, a_minus_T);
    }
    return g;
}

}  // namespace

SolutionValuationProfile solution_valuations(const mpz_class& a, const mpz_class& b, const ThueInstance& inst,
                                             const mpz_class& p, const TrackedRoots* tracked) {
    if (gcd(a, b) != 1) throw InvalidInput("solution pair must be coprime");
    SolutionValuationProfile prof;
    prof.a = a;
    prof.b = b;
    if (tracked) {
        const auto& R = tracked->ring;
        const auto ae = R.from_int(a);
        for (std::size_t j = 0; j < tracked->roots.size(); ++j) {
            const auto& root = tracked->roots[j];
            const int v = R.val(R.sub(ae, R.scale(root.value, b)));
            if (v >= tracked->N) throw InvalidInput("tracking precision too low for this pair");
            prof.per_root.push_back({Valuation::of(v), root.multiplicity, root.part, static_cast<int>(j)});
        }
    } else {
        for (std::size_t k = 0; k < inst.shape.parts.size(); ++k) {
            const auto& part = inst.shape.parts[k];
            for (const auto& v : root_valuations(shifted_factor(part.factor, a, b), p))
                prof.per_root.push_back({v, part.multiplicity, static_cast<int>(k), -1});
        }
    }
    if (prof.per_root.empty()) {
        prof.t = Valuation::of(0);
        return prof;
    }
    prof.t = prof.per_root[0].v;
    for (const auto& r : prof.per_root) prof.t = std::max(prof.t, r.v);
    int hits = 0;
    for (std::size_t j = 0; j < prof.per_root.size(); ++j) {
        if (prof.per_root[j].v != prof.t) continue;
        if (hits++ == 0 && tracked) prof.argmax_index = static_cast<int>(j);
    }
    prof.tie = hits > 1;
    return prof;
}

bool check_vb_zero(const BinaryForm& F, const mpz_class& a, const mpz_class& b, const mpz_class& h,
                   const mpz_class& p) {
    if (gcd(a, b) != 1) throw InvalidInput("pair must be coprime");
    if (h % p != 0) throw InvalidInput("p must divide h");
    if (F.eval(a, b) != h) throw InvalidInput("pair does not solve F(a, b) = h");
    return b != 0 && vp(b, p) == 0;
}

}  // namespace thue
