#include "thue/charts.hpp"

#include "thue/arith.hpp"
#include "thue/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace thue {

namespace {

long long scaled(const mpq_class& v, int e) {
    mpq_class x = v * e;
    x.canonicalize();
    if (x.get_den() != 1) throw IdentityViolation("rescaling left a fraction");
    return mpz_class(x.get_num()).get_si();
}

}  // namespace

ChartData build_chart(int root_index, int root_multiplicity, const Valuation& t, std::vector<GammaEntry> gammas,
                      const mpq_class& w) {
    if (t.infinite) throw InvalidInput("chart needs finite t");
    ChartData c;
    c.root_index = root_index;
    c.root_multiplicity = root_multiplicity;
    c.t = t;
    c.gammas = std::move(gammas);
    long long e = mpz_class(t.value.get_den()).get_si();
    e = std::lcm(e, mpz_class(w.get_den()).get_si());
    for (const auto& g : c.gammas) {
        if (g.v.infinite) throw InvalidInput("distinct roots have finite differences");
        e = std::lcm(e, mpz_class(g.v.value.get_den()).get_si());
    }
    c.e = static_cast<int>(e);
    const long long T = scaled(t.value, c.e);
    std::vector<long long> gv;
    for (const auto& g : c.gammas) gv.push_back(scaled(g.v.value, c.e));

    c.s_seq.push_back(0);
    while (true) {
        std::optional<long long> next;
        for (long long v : gv)
            if (v <= T && v > c.s_seq.back() && (!next || v < *next)) next = v;
        if (!next) break;
        c.s_seq.push_back(*next);
    }
    if (c.s_seq.back() < T) c.s_seq.push_back(T);
    const std::size_t m = c.s_seq.size() - 1;

    c.S_sets.assign(m + 1, {});
    c.S_weights.assign(m + 1, 0);
    for (std::size_t j = 0; j < gv.size(); ++j) {
        std::size_t k = m;
        if (gv[j] < T) {
            k = std::find(c.s_seq.begin(), c.s_seq.end(), gv[j]) - c.s_seq.begin();
            if (k > m) throw IdentityViolation("gamma valuation missing from the s sequence");
        }
        c.S_sets[k].push_back(static_cast<int>(j));
        c.S_weights[k] += c.gammas[j].multiplicity;
    }
    c.S_sets[m].push_back(-1);
    c.S_weights[m] += root_multiplicity;

    for (std::size_t k = 0; k <= m; ++k) {
        long long u = 0;
        for (std::size_t j = 0; j <= m; ++j) u += c.S_weights[j] * (j <= k ? c.s_seq[j] : c.s_seq[k]);
        c.u_seq.push_back(u);
    }
    c.w = scaled(w, c.e);
    return c;
}

ChartData chart_from_profile(const SolutionValuationProfile& prof, const mpq_class& w) {
    if (prof.tie) throw AmbiguousArgmax("t is attained by several roots; the argmax root is not determined");
    std::vector<GammaEntry> gammas;
    int mult = 1;
    bool seen = false;
    for (const auto& r : prof.per_root) {
        if (!seen && r.v == prof.t) {
            mult = r.multiplicity;
            seen = true;
            continue;
        }
        gammas.push_back({r.v, r.multiplicity, -1});
    }
    return build_chart(-1, mult, prof.t, std::move(gammas), w);
}

ChartData chart_from_tracked(const SolutionValuationProfile& prof, const TrackedRoots& tracked, const mpq_class& w) {
    if (!prof.argmax_index) throw InvalidInput("profile was not computed in tracked mode");
    const int i = *prof.argmax_index;
    const auto diff = tracked.difference_matrix();
    std::vector<GammaEntry> gammas;
    for (int j = 0; j < static_cast<int>(tracked.roots.size()); ++j) {
        if (j == i) continue;
        gammas.push_back({diff[i][j], tracked.roots[j].multiplicity, j});
    }
    return build_chart(i, tracked.roots[i].multiplicity, prof.t, std::move(gammas), w);
}

bool verify_w_equals_um(const ChartData& chart) { return chart.u_seq.back() == chart.w; }

namespace {

Valuation raw_t(const mpz_class& a, const mpz_class& b, const TrackedRoots& tracked, std::optional<int>& argmax) {
    const auto& R = tracked.ring;
    Valuation best = Valuation::of(-1);
    for (std::size_t j = 0; j < tracked.roots.size(); ++j) {
        const int v = R.val(R.sub(R.from_int(a), R.scale(tracked.roots[j].value, b)));
        Valuation val = v >= tracked.N ? Valuation::inf() : Valuation::of(v);
        if (best < val) {
            best = val;
            argmax = static_cast<int>(j);
        }
    }
    return best;
}

}  // namespace

DecompReport decomp_check(const ThueInstance& inst, const mpz_class& p,
                          const std::vector<std::pair<mpz_class, mpz_class>>& pairs, const TrackedRoots& tracked) {
    if (inst.h % p != 0) throw InvalidInput("decomp_check needs p | h");
    DecompReport rep;
    std::map<int, std::vector<Valuation>> groups;
    for (const auto& [a, b] : pairs) {
        DecompEntry e;
        e.a = a;
        e.b = b;
        if (gcd(a, b) != 1) {
            e.reason = "not primitive: gcd = " + mpz_class(gcd(a, b)).get_str();
        } else if (inst.F.eval(a, b) != inst.h) {
            e.reason = "not a solution";
        }
        if (!e.reason.empty()) {
            std::optional<int> am;
            e.t = raw_t(a, b, tracked, am);
            e.argmax = am;
            rep.entries.push_back(e);
            continue;
        }
        const auto prof = solution_valuations(a, b, inst, p, &tracked);
        e.accepted = true;
        e.argmax = prof.argmax_index;
        e.t = prof.t;
        groups[*prof.argmax_index].push_back(prof.t);
        rep.entries.push_back(e);
    }
    for (auto& [root, ts] : groups) {
        for (const auto& t : ts)
            if (t != ts.front()) rep.pass = false;
        rep.t_by_root.emplace_back(root, ts);
    }
    return rep;
}

DiskPartition disk_partition(const std::vector<std::vector<Valuation>>& diff_vals,
                             const std::vector<std::pair<int, Valuation>>& charts) {
    const int s = static_cast<int>(diff_vals.size());
    std::vector<int> parent(s);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<Valuation>> ts(s);
    for (const auto& [root, t] : charts) {
        if (root < 0 || root >= s) throw InvalidInput("chart root index out of range");
        ts[root].push_back(t);
    }
    for (int i = 0; i < s; ++i) {
        if (ts[i].empty()) continue;
        for (int j = i + 1; j < s; ++j) {
            if (ts[j].empty()) continue;
            const Valuation ti = *std::min_element(ts[i].begin(), ts[i].end());
            const Valuation tj = *std::min_element(ts[j].begin(), ts[j].end());
            if (diff_vals[i][j] >= min(ti, tj)) {
                const int a = find(i), b = find(j);
                parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    std::map<int, std::vector<int>> by_rep;
    for (int i = 0; i < s; ++i) by_rep[find(i)].push_back(i);
    DiskPartition out;
    for (auto& [rep, members] : by_rep) {
        std::optional<Valuation> bt;
        bool ok = true;
        for (int i : members)
            for (const auto& t : ts[i]) {
                if (!bt) bt = t;
                else if (*bt != t) ok = false;
            }
        out.blocks.push_back(members);
        out.block_t.push_back(bt);
        out.consistent.push_back(ok);
        out.all_consistent = out.all_consistent && ok;
    }
    return out;
}

SpecialFiberShape special_fiber_shape(const std::vector<int>& block, int n, const std::vector<int>& multiplicities) {
    SpecialFiberShape sh;
    sh.r = static_cast<int>(block.size());
    for (int i : block) sh.block_degree += multiplicities.at(i);
    sh.y_exponent = n - sh.block_degree;
    return sh;
}

SpecialFiberShape special_fiber_shape(const std::vector<int>& block, int n, const TrackedRoots& tracked, int rep,
                                      int t) {
    std::vector<int> mults;
    for (const auto& r : tracked.roots) mults.push_back(r.multiplicity);
    SpecialFiberShape sh = special_fiber_shape(block, n, mults);
    if (t >= tracked.N) throw InvalidInput("tracking precision does not exceed t");
    const auto& R = tracked.ring;
    const UnramRing Fq = R.with_precision(1);
    UnramRing::Poly f{Fq.one()};
    for (int j : block) {
        const auto diff = R.sub(tracked.roots[j].value, tracked.roots[rep].value);
        if (R.val(diff) < t) throw InvalidInput("root lies outside the disk");
        const auto g = Fq.reduce(R.div_p_power(diff, t));
        for (int k = 0; k < tracked.roots[j].multiplicity; ++k) f = Fq.mul(f, UnramRing::Poly{Fq.neg(g), Fq.one()});
    }
    sh.reduced = f;
    return sh;
}

}  // namespace thue
