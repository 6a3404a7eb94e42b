#include "thue/enumerate.hpp"

#include "thue/arith.hpp"
#include "thue/bounds.hpp"
#include "thue/charts.hpp"
#include "thue/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

namespace thue {

long default_box(int n) { return n <= 6 ? 10000 : 1000; }

namespace {

using i128 = __int128;

i128 to_i128(const mpz_class& x) {
    mpz_class a = abs(x);
    const mpz_class lo = a & mpz_class("18446744073709551615");
    const mpz_class hi = a >> 64;
    i128 r = (static_cast<i128>(hi.get_ui()) << 64) | static_cast<i128>(lo.get_ui());
    return x < 0 ? -r : r;
}

// Scan b in [0, B] with b = k mod stride. For b = 0 only a = 1 is primitive.
void scan_stripe(const ThueInstance& inst, long B, int k, int stride, bool fast,
                 std::vector<IntPair>& out) {
    const int n = inst.F.n;
    const mpz_class& h = inst.h;
    const mpz_class hneg = (n % 2 == 0) ? h : mpz_class(-h);  // F(a,b) = hneg  <=>  F(-a,-b) = h
    auto record = [&](long a, long b, bool direct, bool negated) {
        if (std::gcd(a, b) != 1) return;
        if (direct) out.emplace_back(a, b);
        if (negated) out.emplace_back(-a, -b);
    };
    if (fast) {
        const i128 H = to_i128(h), Hn = to_i128(hneg);
        std::vector<i128> c;
        for (const auto& x : inst.F.coeffs) c.push_back(to_i128(x));
        std::vector<i128> d(n + 1);
        for (long b = k; b <= B; b += stride) {
            i128 bp = 1;
            for (int i = 0; i <= n; ++i, bp *= b) d[i] = c[i] * bp;
            const long a_lo = b == 0 ? 1 : -B, a_hi = b == 0 ? 1 : B;
            for (long a = a_lo; a <= a_hi; ++a) {
                i128 v = d[0];
                for (int i = 1; i <= n; ++i) v = v * a + d[i];
                if (v == H || v == Hn) record(a, b, v == H, v == Hn);
            }
        }
        return;
    }
    std::vector<mpz_class> d(n + 1);
    mpz_class v;
    for (long b = k; b <= B; b += stride) {
        mpz_class bp = 1;
        for (int i = 0; i <= n; ++i, bp *= b) d[i] = inst.F.coeffs[i] * bp;
        const long a_lo = b == 0 ? 1 : -B, a_hi = b == 0 ? 1 : B;
        for (long a = a_lo; a <= a_hi; ++a) {
            v = d[0];
            for (int i = 1; i <= n; ++i) {
                v *= a;
                v += d[i];
            }
            if (v == h || v == hneg) record(a, b, v == h, v == hneg);
        }
    }
}

}  // namespace

SolutionSet primitive_solutions(const ThueInstance& inst, SearchBox box, unsigned threads,
                                const std::string& instance_id) {
    if (box.B < 1) throw InvalidInput("box bound must be >= 1");
    SolutionSet set;
    set.instance_id = instance_id;
    set.B = box.B;

    // |F(a, b)| and every Horner partial value stay below sum |c_i| B^n.
    mpz_class mag = 0;
    for (const auto& c : inst.F.coeffs) mag += abs(c);
    mag *= ipow(mpz_class(box.B), inst.F.n);
    const mpz_class limit = mpz_class(1) << 125;
    const bool fast = mag < limit && abs(inst.h) < limit;
    if (abs(inst.h) > mag) return set;

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<long>(threads, box.B + 1));
    std::vector<std::vector<IntPair>> parts(threads);
    if (threads == 1) {
        scan_stripe(inst, box.B, 0, 1, fast, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < threads; ++k)
            pool.emplace_back(scan_stripe, std::cref(inst), box.B, static_cast<int>(k), static_cast<int>(threads),
                              fast, std::ref(parts[k]));
        for (auto& t : pool) t.join();
    }
    for (auto& p : parts) set.solutions.insert(set.solutions.end(), p.begin(), p.end());
    std::sort(set.solutions.begin(), set.solutions.end());
    set.solutions.erase(std::unique(set.solutions.begin(), set.solutions.end()), set.solutions.end());
    return set;
}

namespace {

std::vector<unsigned long> coeffs_mod(const BinaryForm& F, long p) {
    std::vector<unsigned long> c;
    for (const auto& x : F.coeffs) c.push_back(mod(x, p).get_ui());
    return c;
}

void check_small_prime(long p) {
    if (p < 2 || p > (1LL << 31) || !is_prime(p)) throw InvalidInput("p must be a prime below 2^31");
}

}  // namespace

long count_affine_points_mod_p(const ThueInstance& inst, long p) {
    check_small_prime(p);
    const auto c = coeffs_mod(inst.F, p);
    const unsigned long P = p, H = mod(inst.h, p).get_ui();
    const int n = inst.F.n;
    std::vector<unsigned long> d(n + 1);
    long count = 0;
    for (unsigned long y = 0; y < P; ++y) {
        unsigned long yp = 1;
        for (int i = 0; i <= n; ++i, yp = yp * y % P) d[i] = c[i] * yp % P;
        for (unsigned long x = 0; x < P; ++x) {
            unsigned long v = d[0];
            for (int i = 1; i <= n; ++i) v = (v * x + d[i]) % P;
            if (v == H) ++count;
        }
    }
    return count;
}

long count_roots_p1(const BinaryForm& F, long p) {
    check_small_prime(p);
    const auto c = coeffs_mod(F, p);
    const unsigned long P = p;
    long count = c[0] == 0 ? 1 : 0;  // (1 : 0)
    for (unsigned long x = 0; x < P; ++x) {
        unsigned long v = 0;
        for (auto ci : c) v = (v * x + ci) % P;
        if (v == 0) ++count;  // (x : 1)
    }
    return count;
}

bool smooth_mod_p(const ThueInstance& inst, long p) {
    check_small_prime(p);
    if (inst.h % p == 0 || inst.F.n % p == 0) return false;
    if (projective_root_count(inst.shape) != inst.F.n) return false;
    Monicized m;
    try {
        m = monicize(inst.F, p);
    } catch (const ThueError&) {
        return false;
    }
    const mpq_class disc = discriminant(m.F.dehomogenize());
    return disc != 0 && vp(disc, mpz_class(p)) == 0;
}

ProjectiveCount count_projective_smooth(const ThueInstance& inst, long p) {
    if (!smooth_mod_p(inst, p))
        throw CaseMismatch("h z^n = F(x, y) is not smooth mod " + std::to_string(p) + "; use the projection bound");
    ProjectiveCount pc;
    pc.affine = count_affine_points_mod_p(inst, p);
    pc.at_infinity = count_roots_p1(inst.F, p);
    pc.count = pc.affine + pc.at_infinity;
    const mpz_class dev = pc.count - p - 1;
    pc.weil_ok = dev * dev <= mpz_class(4) * inst.g * inst.g * p;
    pc.projection_ok = pc.count == 0 || pc.count <= static_cast<long>(inst.F.n - 1) * (p + 1);
    return pc;
}

Census residue_class_census(const ThueInstance& inst, const std::vector<IntPair>& solutions, const mpz_class& p,
                            const TrackedRoots* tracked) {
    if (inst.h % p != 0) throw InvalidInput("census needs p | h");
    Census cen;
    cen.p = p;
    cen.residue_granularity = tracked != nullptr;
    if (p > inst.F.n) {
        const PrimeCase pc = classify_prime(inst, p);
        cen.prime_case = case_letter(pc.tag);
        const long s = projective_root_count(inst.shape);
        if (pc.tag == CaseTag::b) cen.class_bound = s * p.get_si();
        if (pc.tag == CaseTag::d) cen.class_bound = s * inst.F.n * p.get_si();
    }

    std::vector<SolutionValuationProfile> profs;
    for (const auto& [a, b] : solutions) {
        if (inst.F.eval(a, b) != inst.h || gcd(a, b) != 1) throw InvalidInput("census input is not a primitive solution");
        profs.push_back(solution_valuations(a, b, inst, p, tracked));
    }

    if (!tracked) {
        // Key: (t, the full valuation profile).
        std::set<std::vector<std::string>> keys;
        for (const auto& pr : profs) {
            CensusEntry e;
            e.a = pr.a;
            e.b = pr.b;
            e.t = pr.t;
            std::vector<std::string> key{pr.t.str()};
            for (const auto& r : pr.per_root) key.push_back(r.v.str());
            keys.insert(key);
            cen.entries.push_back(e);
        }
        cen.class_count = static_cast<long>(keys.size());
        cen.within_bound = !cen.class_bound || cen.class_count <= *cen.class_bound;
        return cen;
    }

    const auto diff = tracked->difference_matrix();
    std::vector<std::pair<int, Valuation>> charts;
    for (const auto& pr : profs) charts.emplace_back(*pr.argmax_index, pr.t);
    const DiskPartition dp = disk_partition(diff, charts);
    cen.blocks = dp.blocks;
    std::vector<int> block_of(tracked->roots.size(), -1);
    for (std::size_t k = 0; k < dp.blocks.size(); ++k)
        for (int i : dp.blocks[k]) block_of[i] = static_cast<int>(k);

    const UnramRing& R = tracked->ring;
    const UnramRing Fq = R.with_precision(1);
    const int w = vp(inst.h, p);
    const auto h_unit = Fq.from_int(inst.h / ipow(p, w));
    const auto c_red = Fq.from_int(inst.shape.c);
    std::set<std::tuple<int, std::string, std::vector<mpz_class>, mpz_class>> keys;
    for (const auto& pr : profs) {
        CensusEntry e;
        e.a = pr.a;
        e.b = pr.b;
        e.argmax = *pr.argmax_index;
        e.block = block_of[e.argmax];
        e.t = pr.t;
        e.bbar = mod(pr.b, p);
        if (!pr.t.integral() || pr.t.value >= tracked->N) throw InvalidInput("tracking precision does not exceed t");
        const int t = static_cast<int>(mpz_class(pr.t.value.get_num()).get_si());
        const int rep = dp.blocks[e.block].front();
        const auto& arep = tracked->roots[rep].value;
        const auto lin = R.sub(R.from_int(pr.a), R.scale(arep, pr.b));
        const auto ubar = Fq.reduce(R.div_p_power(lin, t));
        e.ubar = ubar;
        // h / p^w = c prod_in (ubar - gamma~ b)^{n_j} prod_out (-gamma' b)^{n_j} mod p
        const auto bb = Fq.from_int(pr.b);
        auto prod = c_red;
        int wsum = 0;
        for (std::size_t j = 0; j < tracked->roots.size(); ++j) {
            const auto gam = R.sub(tracked->roots[j].value, arep);
            const int vg = R.val(gam);
            const int nj = tracked->roots[j].multiplicity;
            UnramRing::Elem factor;
            if (vg >= t) {
                factor = Fq.sub(ubar, Fq.mul(Fq.reduce(R.div_p_power(gam, t)), bb));
                wsum += nj * t;
            } else {
                factor = Fq.neg(Fq.mul(Fq.reduce(R.div_p_power(gam, vg)), bb));
                wsum += nj * vg;
            }
            for (int k = 0; k < nj; ++k) prod = Fq.mul(prod, factor);
        }
        for (int k = 0; k < inst.shape.degree_deficit; ++k) prod = Fq.mul(prod, bb);
        e.fiber_ok = wsum == w && Fq.sub(prod, h_unit) == Fq.zero();
        cen.fiber_identity_ok = cen.fiber_identity_ok && e.fiber_ok;
        keys.emplace(e.block, e.t.str(), e.ubar, e.bbar);
        cen.entries.push_back(std::move(e));
    }
    cen.class_count = static_cast<long>(keys.size());
    cen.within_bound = !cen.class_bound || cen.class_count <= *cen.class_bound;
    return cen;
}

namespace {

FamilyInstance build_family(const std::vector<mpz_class>& a_list, const mpz_class& h) {
    const int n = static_cast<int>(a_list.size());
    if (n < 1) throw InvalidInput("a_list must be nonempty");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a_list[i] == a_list[j]) throw InvalidInput("a_i must be distinct");
    if (h == 0) throw InvalidInput("h must be nonzero");
    std::vector<mpz_class> c{1};
    for (const auto& a : a_list) {
        std::vector<mpz_class> next(c.size() + 1, 0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k] += c[k];
            next[k + 1] -= a * c[k];
        }
        c = std::move(next);
    }
    c[n] += h;
    FamilyInstance fam;
    fam.inst = make_instance(BinaryForm::from_coeffs(c), h);
    fam.a_list = a_list;
    for (const auto& a : a_list) {
        fam.certified.emplace_back(a, 1);
        if (n % 2 == 0) fam.certified.emplace_back(-a, -1);
    }
    return fam;
}

}  // namespace

FamilyInstance example_family(const std::vector<mpz_class>& a_list, const mpz_class& h) {
    FamilyInstance fam = build_family(a_list, h);
    for (const auto& [a, b] : fam.certified)
        if (fam.inst.F.eval(a, b) != fam.inst.h) throw IdentityViolation("certified pair fails F = h");
    std::sort(fam.certified.begin(), fam.certified.end());
    return fam;
}

FamilyInstance example_family_extra(std::vector<mpz_class> a_list, const mpz_class& q) {
    const int n = static_cast<int>(a_list.size());
    if (n < 2) throw InvalidInput("extra mode needs n >= 2");
    if (abs(q) < 2) throw InvalidInput("q must satisfy |q| >= 2");
    a_list[0] = ipow(q, n - 1);
    mpz_class h = 1;
    for (int i = 1; i < n; ++i) h *= 1 - a_list[i] * q;
    FamilyInstance fam = build_family(a_list, h);
    fam.certified.emplace_back(1, q);
    if (n % 2 == 0) fam.certified.emplace_back(-1, -q);
    for (const auto& [a, b] : fam.certified)
        if (fam.inst.F.eval(a, b) != fam.inst.h) throw IdentityViolation("certified pair fails F = h");
    std::sort(fam.certified.begin(), fam.certified.end());
    return fam;
}

std::vector<SetMembership> classify_S_T(const ThueInstance& inst, const std::vector<IntTriple>& points,
                                        const mpz_class& p) {
    if (!is_prime(p)) throw InvalidInput("p must be prime");
    const unsigned long n = inst.F.n;
    std::vector<SetMembership> out;
    for (const auto& raw : points) {
        const mpz_class g = gcd(gcd(raw.x, raw.y), raw.z);
        if (g == 0) throw InvalidInput("the zero triple is not a projective point");
        IntTriple pt{raw.x / g, raw.y / g, raw.z / g};
        if (inst.h * ipow(pt.z, n) != inst.F.eval(pt.x, pt.y)) throw InvalidInput("point is not on h z^n = F(x, y)");
        SetMembership m;
        m.point = pt;
        if (pt.z % p != 0) {
            m.set = OtherSet::S;
            int i = 0;
            while (pt.x % ipow(p, i + 1) == 0 && pt.y % ipow(p, i + 1) == 0) ++i;
            m.index = i;
            const mpz_class pi = ipow(p, i);
            m.target_h = inst.h / ipow(pi, n);
            m.image = {pt.x / pi, pt.y / pi, pt.z};
        } else {
            m.set = OtherSet::T;
            m.index = vp(pt.z, p);
            const mpz_class pi = ipow(p, m.index);
            m.target_h = inst.h * ipow(pi, n);
            m.image = {pt.x, pt.y, pt.z / pi};
        }
        if (m.target_h * ipow(m.image.z, n) != inst.F.eval(m.image.x, m.image.y))
            throw IdentityViolation("S/T image misses the target curve");
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace thue
