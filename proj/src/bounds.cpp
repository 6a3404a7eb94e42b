#include "thue/bounds.hpp"

#include "thue/arith.hpp"
#include "thue/errors.hpp"

#include <numeric>
#include <sstream>

namespace thue {

char case_letter(CaseTag t) { return "abcd"[static_cast<int>(t)]; }

PrimeCase classify_prime(const ThueInstance& inst, const mpz_class& p) {
    if (!is_prime(p)) throw InvalidInput("p must be prime");
    if (p <= inst.F.n) throw InvalidInput("classification needs p > n");
    PrimeCase pc;
    pc.p = p;
    pc.divides_h = inst.h % p == 0;
    pc.divides_dstar = inst.dstar != 0 && vp(inst.dstar, p) > 0;
    if (!pc.divides_h && !pc.divides_dstar) pc.tag = CaseTag::a;
    else if (pc.divides_h && !pc.divides_dstar) pc.tag = CaseTag::b;
    else if (!pc.divides_h) pc.tag = CaseTag::c;
    else pc.tag = CaseTag::d;
    return pc;
}

mpz_class bertrand_prime(int n) {
    if (n < 2) throw InvalidInput("Bertrand prime needs n >= 2");
    for (long long q = n + 1; q < 2LL * n; ++q)
        if (is_prime(q)) return mpz_class(std::to_string(q));
    throw IdentityViolation("no prime in (n, 2n)");
}

RankHypothesis RankHypothesis::parse(const std::string& decl) {
    RankHypothesis h;
    h.source = decl;
    if (decl.empty() || decl == "none") return h;
    const auto colon = decl.find(':');
    const std::string kind = decl.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : decl.substr(colon + 1);
    if (kind == "chabauty_lt_g") {
        h.kind = HypKind::chabauty_lt_g;
        if (arg == "cyclotomic") h.field = HypField::cyclotomic;
        else if (!arg.empty() && arg != "rational") throw InvalidInput("chabauty_lt_g takes rational|cyclotomic");
        return h;
    }
    if (kind == "mw_rank_value" || kind == "mw_lt_threshold") {
        h.kind = kind == "mw_rank_value" ? HypKind::mw_rank_value : HypKind::mw_lt_threshold;
        mpz_class v;
        if (arg.empty() || v.set_str(arg, 10) != 0 || v < 0) throw InvalidInput(kind + " needs a nonnegative integer");
        h.value = v;
        return h;
    }
    throw InvalidInput("unknown hypothesis kind: " + kind);
}

std::string RankHypothesis::str() const {
    switch (kind) {
        case HypKind::none: return "none";
        case HypKind::chabauty_lt_g:
            return field == HypField::cyclotomic ? "chabauty_lt_g:cyclotomic" : "chabauty_lt_g";
        case HypKind::mw_rank_value: return "mw_rank_value:" + value->get_str();
        case HypKind::mw_lt_threshold: return "mw_lt_threshold:" + value->get_str();
    }
    return "none";
}

bool RankHypothesis::implies_chabauty_lt_g(int g) const {
    switch (kind) {
        case HypKind::chabauty_lt_g: return field == HypField::rational;
        case HypKind::mw_rank_value: return *value < g;
        case HypKind::mw_lt_threshold: return *value <= g;
        default: return false;
    }
}

bool RankHypothesis::implies_mw_below(const mpq_class& bound) const {
    switch (kind) {
        case HypKind::mw_rank_value: return mpq_class(*value) < bound;
        case HypKind::mw_lt_threshold: return mpq_class(*value) <= bound;
        default: return false;
    }
}

const char* quantity_name(Quantity q) {
    switch (q) {
        case Quantity::X_Q: return "|X(Q)|";
        case Quantity::N_FhQp: return "N(F,h,Q,p)";
        case Quantity::N_Fh: return "N(F,h)";
    }
    return "?";
}

RationalBound make_bound(const mpq_class& v) {
    RationalBound b;
    b.value = v;
    b.value.canonicalize();
    mpz_fdiv_q(b.floor.get_mpz_t(), b.value.get_num_mpz_t(), b.value.get_den_mpz_t());
    return b;
}

mpq_class chabauty_term(int g, const mpz_class& p) {
    if (p <= 2) throw InvalidInput("needs p > 2");
    mpq_class v(mpz_class(2 * g - 2) * (p - 1), p - 2);
    v.canonicalize();
    return v;
}

RationalBound bound_pro1(int g, const mpz_class& p, const mpz_class& smooth_count) {
    return make_bound(chabauty_term(g, p) + smooth_count);
}

RationalBound bound_pro2(int g, const mpz_class& p, int s) { return make_bound(chabauty_term(g, p) + s * p); }

RationalBound bound_pro3(int g, const mpz_class& p, const mpz_class& a_p) {
    return make_bound(chabauty_term(g, p) + a_p);
}

RationalBound bound_pro4(int g, const mpz_class& p, int s, int n) {
    return make_bound(chabauty_term(g, p) + mpz_class(s) * n * p);
}

mpz_class thm_main_case_value(CaseTag tag, int n, int g, int s) {
    const mpz_class base = mpz_class(2 * g) + s - 5;
    switch (tag) {
        case CaseTag::a: return base + 2 * mpz_class(n) * (n - 1);
        case CaseTag::b: return mpz_class(2 * g) - 5 + 2 * mpz_class(s) * n;
        case CaseTag::c: return base + mpz_class(n) * (2 * n - 1);
        case CaseTag::d: return base + mpz_class(s) * n * (2 * n - 1);
    }
    return 0;
}

Quantity thm_main_case_quantity(CaseTag tag) {
    return (tag == CaseTag::a || tag == CaseTag::b) ? Quantity::X_Q : Quantity::N_FhQp;
}

mpz_class thm_main_global(int n) {
    const mpz_class N = n;
    return 2 * N * N * N - 2 * N - 3;
}

namespace {

const char* case_formula(CaseTag tag) {
    switch (tag) {
        case CaseTag::a: return "2g+s-5+2n(n-1)";
        case CaseTag::b: return "2g-5+2sn";
        case CaseTag::c: return "2g+s-5+n(2n-1)";
        case CaseTag::d: return "2g+s-5+sn(2n-1)";
    }
    return "";
}

std::string chab_condition() { return "Chabauty rank over Q < g"; }

}  // namespace

BoundReport start_report(int n, int g, int s, const PrimeCase& pc, const RankHypothesis& hyp) {
    BoundReport rep;
    rep.n = n;
    rep.g = g;
    rep.s = s;
    rep.prime_case = pc;
    rep.hypothesis = hyp;
    return rep;
}

BoundReport thm_main_bounds(int n, int g, int s, const PrimeCase& pc, const RankHypothesis& hyp) {
    BoundReport rep = start_report(n, g, s, pc, hyp);
    add_thm_main_bounds(rep);
    return rep;
}

void add_thm_main_bounds(BoundReport& rep) {
    const int n = rep.n, g = rep.g, s = rep.s;
    const PrimeCase& pc = rep.prime_case;
    if (!(pc.p > n && pc.p < 2 * n)) throw InvalidInput("theorem bounds need n < p < 2n");
    const bool ok = rep.hypothesis.implies_chabauty_lt_g(g);

    BoundEntry ce;
    ce.name = std::string("thm_main.") + case_letter(pc.tag);
    ce.formula = case_formula(pc.tag);
    ce.quantity = thm_main_case_quantity(pc.tag);
    ce.bound = make_bound(thm_main_case_value(pc.tag, n, g, s));
    ce.applies = ok;
    ce.condition = chab_condition();
    rep.entries.push_back(ce);

    BoundEntry ge;
    ge.name = "thm_main.global";
    ge.formula = "2n^3-2n-3";
    ge.quantity = Quantity::N_Fh;
    ge.bound = make_bound(thm_main_global(n));
    ge.applies = ok;
    ge.condition = chab_condition() + " at the Bertrand prime";
    rep.entries.push_back(ge);

    // With g <= (n-1)(n-2)/2 and s <= n every case value is at most the
    // global one; a failure here is a bug, not a finding.
    if (2 * g <= (n - 1) * (n - 2) && s <= n && thm_main_case_value(pc.tag, n, g, s) > thm_main_global(n))
        throw IdentityViolation("case bound exceeds the global bound");

    const mpq_class lhs = chabauty_term(g, pc.p);
    const mpq_class rhs = 2 * g + s - 5;
    if (lhs > rhs) {
        std::ostringstream os;
        os << "(2g-2)(p-1)/(p-2) = " << lhs.get_str() << " exceeds 2g+s-5 = " << rhs.get_str()
           << " (n=" << n << ", g=" << g << ", s=" << s << ", p=" << pc.p.get_str() << ")";
        const mpz_class fl = make_bound(lhs).floor;
        if (fl <= rhs) os << "; its floor " << fl.get_str() << " does not";
        rep.findings.push_back(os.str());
    }
}

void add_proposition_bounds(BoundReport& rep, const std::optional<mpz_class>& smooth_count,
                            const std::optional<mpz_class>& affine_count) {
    const auto& p = rep.prime_case.p;
    const bool ok = rep.hypothesis.implies_chabauty_lt_g(rep.g);
    auto push = [&](const std::string& name, const std::string& formula, Quantity q, const RationalBound& b) {
        BoundEntry e;
        e.name = name;
        e.formula = formula;
        e.quantity = q;
        e.bound = b;
        e.applies = ok;
        e.condition = chab_condition();
        rep.entries.push_back(e);
    };
    switch (rep.prime_case.tag) {
        case CaseTag::a:
            if (smooth_count) push("pro1", "(2g-2)(p-1)/(p-2)+|Xbar(F_p)|", Quantity::X_Q, bound_pro1(rep.g, p, *smooth_count));
            if (smooth_count && *smooth_count == 0)
                rep.notes.push_back("no F_p-points on the smooth reduction: X(Q) is empty");
            break;
        case CaseTag::b: push("pro2", "(2g-2)(p-1)/(p-2)+sp", Quantity::X_Q, bound_pro2(rep.g, p, rep.s)); break;
        case CaseTag::c:
            if (affine_count) push("pro3", "(2g-2)(p-1)/(p-2)+a(p)", Quantity::N_FhQp, bound_pro3(rep.g, p, *affine_count));
            break;
        case CaseTag::d: push("pro4", "(2g-2)(p-1)/(p-2)+snp", Quantity::N_FhQp, bound_pro4(rep.g, p, rep.s, rep.n)); break;
    }
}

std::vector<CaseValue> ref1_values(int n, int a) {
    if (n < 5 || !is_prime(static_cast<long long>(n))) throw InvalidInput("refinement needs n >= 5 prime");
    if (a <= 1) throw InvalidInput("refinement needs a > 1");
    const mpz_class p = mpz_class(a) * n + 1;
    if (!is_prime(p)) throw InvalidInput("an + 1 must be prime");
    const mpz_class N = n, A = a;
    return {
        {"a", "p!h, p!d*", "(a+2)n-(a+1)", Quantity::X_Q, (A + 2) * N - (A + 1)},
        {"b", "p|h, p!d*", "(a+2)n-2", Quantity::X_Q, (A + 2) * N - 2},
        {"c", "p!h, p|d*", "(a+1)(n-1)", Quantity::N_FhQp, (A + 1) * (N - 1)},
        {"d", "p|h, p|d*", "an^2+2n-3", Quantity::N_FhQp, A * N * N + 2 * N - 3},
    };
}

std::vector<CaseValue> ref2_values(const mpz_class& p) {
    if (p < 5 || !is_prime(p)) throw InvalidInput("refinement needs a prime p >= 5");
    const mpz_class n = p - 1;
    return {
        {"a", "p!d*", "4n-3", Quantity::N_FhQp, 4 * n - 3},
        {"a", "p!d*", "5n-3", Quantity::X_Q, 5 * n - 3},
        {"b", "p!h, p|d*", "4n-3", Quantity::N_FhQp, 4 * n - 3},
        {"c", "p|h, p|d*", "2n^2+4n-5", Quantity::N_FhQp, 2 * n * n + 4 * n - 5},
    };
}

void add_refinement_bounds(BoundReport& rep) {
    const auto& pc = rep.prime_case;
    const int n = rep.n;
    if (n >= 5 && is_prime(static_cast<long long>(n)) && (pc.p - 1) % n == 0) {
        const int a = static_cast<int>(mpz_class((pc.p - 1) / n).get_si());
        if (a > 1) {
            const bool ok = rep.hypothesis.implies_mw_below(mpq_class(n - 3, 2));
            for (const auto& cv : ref1_values(n, a)) {
                if (cv.label[0] != case_letter(pc.tag)) continue;
                BoundEntry e;
                e.name = "ref1." + cv.label;
                e.formula = cv.formula;
                e.quantity = cv.quantity;
                e.bound = make_bound(cv.value);
                e.applies = ok;
                e.condition = "Mordell-Weil rank over Q < (n-3)/2";
                rep.entries.push_back(e);
            }
            rep.notes.push_back("n prime: rank over Q times (n-1) equals rank over Q(zeta_n)");
        }
    }
    if (pc.p >= 5 && pc.p - 1 == n) {
        // Theorem cases a/b of the main bound both fall under label a here.
        const char want = pc.tag == CaseTag::a || pc.tag == CaseTag::b ? 'a' : pc.tag == CaseTag::c ? 'b' : 'c';
        const bool cyclo = rep.hypothesis.kind == HypKind::chabauty_lt_g && rep.hypothesis.field == HypField::cyclotomic;
        const bool mw = rep.hypothesis.implies_mw_below(pro_dim_threshold(rep.s));
        for (const auto& cv : ref2_values(pc.p)) {
            if (cv.label[0] != want) continue;
            BoundEntry e;
            e.name = "ref2." + cv.label;
            e.formula = cv.formula;
            e.quantity = cv.quantity;
            e.bound = make_bound(cv.value);
            e.applies = cyclo || mw;
            e.condition = cyclo ? "Chabauty rank over Q(zeta_{p-1}) < g"
                                : "Mordell-Weil rank over Q < (s-2)/2 (gives Chabauty rank over Q(zeta_{p-1}) < g)";
            rep.entries.push_back(e);
        }
    }
}

mpz_class projection_point_bound(int n, const mpz_class& p, bool has_point) {
    return has_point ? mpz_class(mpz_class(n - 1) * (p + 1)) : mpz_class(mpz_class(n) * p);
}

IntPoly sigma_char_poly(int n, const std::vector<int>& multiplicities) {
    long long sum = 0;
    for (int m : multiplicities) sum += m;
    if (sum % n != 0) throw InvalidInput("sum of multiplicities must be divisible by n");
    const int s = static_cast<int>(multiplicities.size());
    if (s < 2) throw InvalidInput("needs at least two roots");
    const IntPoly phi(n, 1);  // 1 + t + ... + t^{n-1}
    IntPoly num = pow(phi, s - 2);
    IntPoly den{1};
    for (int m : multiplicities) den = mul(den, IntPoly(std::gcd(n, m), 1));
    auto [q, r] = divmod(to_rat(num), to_rat(den));
    if (!r.empty()) throw InvalidInput("characteristic polynomial division is not exact");
    IntPoly out;
    for (const auto& c : q) {
        if (c.get_den() != 1) throw InvalidInput("characteristic polynomial is not integral");
        out.push_back(c.get_num());
    }
    return out;
}

int dim_Ad(int n, int d, int s) {
    if (d <= 0 || n % d != 0) throw InvalidInput("d must divide n");
    const long long v = static_cast<long long>(euler_phi(d)) * (s - 2);
    if (v % 2 != 0) throw InvalidInput("phi(d)(s-2)/2 is not an integer");
    return static_cast<int>(v / 2);
}

mpq_class pro_dim_threshold(int s) {
    if (s < 2) throw InvalidInput("needs s >= 2");
    mpq_class v(s - 2, 2);
    v.canonicalize();
    return v;
}

}  // namespace thue
