#include "thue/cli.hpp"

#include "thue/arith.hpp"
#include "thue/charts.hpp"
#include "thue/errors.hpp"
#include "thue/padic.hpp"

#include <algorithm>
#include <sstream>

namespace thue {

std::vector<InstanceSource> load_instances(const std::optional<std::string>& coeffs,
                                           const std::optional<std::string>& h,
                                           const std::optional<std::string>& corpus) {
    std::vector<InstanceSource> out;
    if (corpus) {
        if (coeffs || h) throw InvalidInput("give either --corpus or --F/--h, not both");
        for (const auto& e : read_corpus(*corpus)) {
            std::string id = "line" + std::to_string(e.line);
            out.push_back({id, e.coeffs, e.h, e.notes});
        }
        return out;
    }
    if (!coeffs || !h) throw InvalidInput("an instance needs --F and --h (or --corpus)");
    out.push_back({"cli", parse_int_list(*coeffs), parse_int(*h), ""});
    return out;
}

namespace {

void write_text(std::ostream& os, const json& j, int indent) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const auto& v = it.value();
            const bool nested = (v.is_object() && !v.empty()) ||
                                (v.is_array() && std::any_of(v.begin(), v.end(), [](const json& x) {
                                     return x.is_object() || x.is_array();
                                 }));
            if (nested) {
                os << pad << it.key() << ":\n";
                write_text(os, v, indent + 2);
            } else {
                os << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object()) {
                os << pad << "-\n";
                write_text(os, v, indent + 2);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string pairs_str(const std::vector<IntPair>& v) {
    std::string s;
    for (const auto& [a, b] : v) {
        if (!s.empty()) s += ';';
        s += a.get_str() + ":" + b.get_str();
    }
    return s;
}

ThueInstance instance_of(const InstanceSource& src, json& out) {
    ThueInstance inst = make_instance(BinaryForm::from_coeffs(src.coeffs), src.h);
    out["instance"] = src.id;
    if (!src.notes.empty()) out["notes"] = src.notes;
    out["F"] = inst.F.str();
    out["h"] = json_int(inst.h);
    if (inst.content_divisor != 1) {
        out["warnings"].push_back("F had content " + inst.content_divisor.get_str() +
                                  "; divided F and h by it");
    }
    return inst;
}

void require_irreducible(const ThueInstance& inst) {
    if (!inst.irreducible)
        throw InvalidInput("h z^n = F(x, y) is reducible: gcd(n, n_1, ..., n_s, deficit) > 1");
}

mpz_class working_prime(const RunConfig& cfg, const ThueInstance& inst) {
    if (!cfg.prime) return bertrand_prime(inst.F.n);
    const mpz_class& p = *cfg.prime;
    if (!is_prime(p)) throw InvalidInput("--p must be prime");
    if (p <= inst.F.n) throw InvalidInput("--p must exceed n");
    return p;
}

// Point counts are brute force over F_p^2; larger primes skip them.
constexpr long kCountLimit = 20000;

struct Counts {
    std::optional<mpz_class> smooth, affine;
};

Counts point_counts(const ThueInstance& inst, const mpz_class& p, json& out, bool& violation) {
    Counts c;
    if (p > kCountLimit) {
        out["point_counts"] = "skipped: p above " + std::to_string(kCountLimit);
        return c;
    }
    const long pl = p.get_si();
    const long ap = count_affine_points_mod_p(inst, pl);
    c.affine = ap;
    json pc{{"p", pl}, {"a_p", ap}};
    if (inst.F.coeffs.back() % p != 0) {
        const bool ok = ap <= inst.F.n * pl;
        pc["a_p_le_np"] = ok;
        violation = violation || !ok;
    }
    if (smooth_mod_p(inst, pl)) {
        const ProjectiveCount proj = count_projective_smooth(inst, pl);
        c.smooth = proj.count;
        pc["smooth_model"] = json_of(proj);
        violation = violation || !proj.weil_ok || !proj.projection_ok;
    } else {
        pc["smooth_model"] = "not smooth mod p; projection bound " +
                             projection_point_bound(inst.F.n, p, true).get_str();
    }
    out["point_counts"] = pc;
    return c;
}

BoundReport bound_report(const RunConfig& cfg, const ThueInstance& inst, const mpz_class& p, const Counts& counts,
                         const std::string& id) {
    const int s = projective_root_count(inst.shape);
    BoundReport rep = start_report(inst.F.n, inst.g, s, classify_prime(inst, p), cfg.hypothesis);
    rep.instance_id = id;
    if (p < 2 * inst.F.n) add_thm_main_bounds(rep);
    add_proposition_bounds(rep, counts.smooth, counts.affine);
    add_refinement_bounds(rep);
    if (cfg.hypothesis.kind == HypKind::none)
        rep.notes.push_back("no rank hypothesis declared; no bound is asserted");
    return rep;
}

// Runs body for each instance, folding exit codes: input errors dominate
// violations, which dominate success.
template <class Body>
CmdResult for_each_instance(const RunConfig& cfg, Body body) {
    CmdResult res;
    res.report = json::array();
    for (const auto& src : cfg.instances) {
        json out;
        int code = kExitOk;
        try {
            code = body(src, out, res);
        } catch (const IdentityViolation& e) {
            out["violation"] = e.what();
            code = kExitViolation;
        } catch (const ThueError& e) {
            out["instance"] = src.id;
            out["error"] = e.what();
            code = kExitInput;
        }
        res.exit_code = std::max(res.exit_code, code);
        res.report.push_back(out);
    }
    return res;
}

}  // namespace

std::string render(const CmdResult& r, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        os << r.report.dump(2) << "\n";
    } else if (format == "csv") {
        for (std::size_t i = 0; i < r.csv_header.size(); ++i) os << (i ? "," : "") << csv_field(r.csv_header[i]);
        os << "\n";
        for (const auto& row : r.csv_rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
            os << "\n";
        }
    } else if (format == "text") {
        write_text(os, r.report, 0);
    } else {
        throw InvalidInput("unknown format " + format);
    }
    return os.str();
}

CmdResult cmd_analyze(const RunConfig& cfg) {
    return for_each_instance(cfg, [&](const InstanceSource& src, json& out, CmdResult& res) {
        const ThueInstance inst = instance_of(src, out);
        out["n"] = inst.F.n;
        out["s"] = projective_root_count(inst.shape);
        out["shape"] = json_of(inst.shape);
        out["irreducible"] = inst.irreducible;
        require_irreducible(inst);
        out["g"] = inst.g;
        out["dstar"] = json_rat(inst.dstar);
        json primes = json::array();
        const mpz_class pb = bertrand_prime(inst.F.n);
        json jb = json_of(classify_prime(inst, pb));
        jb["role"] = "bertrand";
        primes.push_back(jb);
        if (cfg.prime) {
            json jo = json_of(classify_prime(inst, working_prime(cfg, inst)));
            jo["role"] = "override";
            primes.push_back(jo);
        }
        out["primes"] = primes;
        res.csv_header = {"instance", "n", "s", "g", "dstar", "irreducible", "p", "case"};
        for (const auto& pj : primes)
            res.csv_rows.push_back({src.id, std::to_string(inst.F.n), out["s"].dump(), std::to_string(inst.g),
                                    inst.dstar.get_str(), "true", pj["p"].dump(), pj["case"].get<std::string>()});
        return kExitOk;
    });
}

CmdResult cmd_bound(const RunConfig& cfg) {
    return for_each_instance(cfg, [&](const InstanceSource& src, json& out, CmdResult& res) {
        const ThueInstance inst = instance_of(src, out);
        require_irreducible(inst);
        const mpz_class p = working_prime(cfg, inst);
        bool violation = false;
        const Counts counts = point_counts(inst, p, out, violation);
        const BoundReport rep = bound_report(cfg, inst, p, counts, src.id);
        out["bounds"] = json_of(rep);
        res.csv_header = {"instance", "p", "case", "bound", "quantity", "status", "value", "hypothesis"};
        const std::string hyp = cfg.hypothesis.kind == HypKind::none ? "" : cfg.hypothesis.source;
        for (const auto& e : rep.entries)
            res.csv_rows.push_back({src.id, p.get_str(), std::string(1, case_letter(rep.prime_case.tag)), e.name,
                                    quantity_name(e.quantity), e.applies ? "applies" : "conditional",
                                    e.applies ? e.bound.floor.get_str() : "", hyp});
        return violation ? kExitViolation : kExitOk;
    });
}

CmdResult cmd_enumerate(const RunConfig& cfg) {
    return for_each_instance(cfg, [&](const InstanceSource& src, json& out, CmdResult& res) {
        const ThueInstance inst = instance_of(src, out);
        const long B = cfg.box.value_or(default_box(inst.F.n));
        const SolutionSet set = primitive_solutions(inst, {B}, cfg.threads, src.id);
        out["enumeration"] = json_of(set);
        res.csv_header = {"instance", "B", "count", "solutions"};
        res.csv_rows.push_back({src.id, std::to_string(B), std::to_string(set.solutions.size()),
                                pairs_str(set.solutions)});
        return kExitOk;
    });
}

namespace {

// Chart, decomposition, disk and census checks at p | h, on the monicized
// model F(x, y + ux) with solutions moved along by (a, b) -> (a, b - ua).
bool chart_checks(const RunConfig& cfg, const ThueInstance& inst, const mpz_class& p,
                  const std::vector<IntPair>& sols, json& out) {
    bool violation = false;
    const Monicized mono = monicize(inst.F, p);
    const ThueInstance minst = make_instance(mono.F, inst.h);
    auto move = [&](const std::vector<IntPair>& v) {
        std::vector<IntPair> r;
        for (const auto& [a, b] : v) r.emplace_back(a, b - mono.u * a);
        return r;
    };
    const auto msols = move(sols);
    out["monicize_u"] = json_int(mono.u);

    long vb_fail = 0;
    for (const auto& [a, b] : msols)
        if (!check_vb_zero(minst.F, a, b, minst.h, p)) ++vb_fail;
    out["vb_zero"] = json{{"checked", msols.size()}, {"failures", vb_fail}};
    violation = violation || vb_fail > 0;

    const mpq_class w = vp(inst.h, p);
    const int N = cfg.precision.value_or(default_precision(minst, p));
    std::optional<TrackedRoots> tracked;
    try {
        tracked = hensel_track_roots(minst.shape, p, N);
        out["tracking"] = json{{"precision", tracked->N}, {"residue_degree", tracked->ring.degree()}};
    } catch (const RamifiedCase& e) {
        out["tracking"] = std::string("unavailable: ") + e.what();
    }

    long w_fail = 0, ambiguous = 0;
    json charts = json::array();
    std::vector<std::pair<int, Valuation>> chart_keys;
    for (const auto& [a, b] : msols) {
        const auto prof = solution_valuations(a, b, minst, p, tracked ? &*tracked : nullptr);
        try {
            const ChartData c = tracked ? chart_from_tracked(prof, *tracked, w) : chart_from_profile(prof, w);
            if (!verify_w_equals_um(c)) ++w_fail;
            if (tracked) chart_keys.emplace_back(c.root_index, c.t);
            json jc = json_of(c);
            jc["pair"] = json::array({json_int(a), json_int(b)});
            charts.push_back(jc);
        } catch (const AmbiguousArgmax&) {
            ++ambiguous;
        }
    }
    out["charts"] = json{{"count", charts.size()}, {"w_ne_um", w_fail}, {"ambiguous", ambiguous}, {"data", charts}};
    violation = violation || w_fail > 0;

    if (tracked) {
        std::vector<IntPair> pairs = msols;
        for (const auto& pr : move(cfg.extra_pairs)) pairs.push_back(pr);
        const DecompReport dr = decomp_check(minst, p, pairs, *tracked);
        out["decomp"] = json_of(dr);
        violation = violation || !dr.pass;
        const DiskPartition dp = disk_partition(tracked->difference_matrix(), chart_keys);
        out["disks"] = json_of(dp);
        violation = violation || !dp.all_consistent;
    } else {
        out["decomp"] = "skipped: needs tracked roots";
    }
    const Census cen = residue_class_census(minst, msols, p, tracked ? &*tracked : nullptr);
    out["census"] = json_of(cen);
    violation = violation || !cen.within_bound || !cen.fiber_identity_ok;
    return violation;
}

}  // namespace

CmdResult cmd_verify(const RunConfig& cfg) {
    return for_each_instance(cfg, [&](const InstanceSource& src, json& out, CmdResult& res) {
        const ThueInstance inst = instance_of(src, out);
        require_irreducible(inst);
        const mpz_class p = working_prime(cfg, inst);
        const long B = cfg.box.value_or(default_box(inst.F.n));
        const SolutionSet set = primitive_solutions(inst, {B}, cfg.threads, src.id);
        out["enumeration"] = json_of(set);
        bool violation = false;

        const Counts counts = point_counts(inst, p, out, violation);
        const BoundReport rep = bound_report(cfg, inst, p, counts, src.id);
        out["bounds"] = json_of(rep);
        const mpz_class found = static_cast<unsigned long>(set.solutions.size());
        json cmp = json::array();
        for (const auto& e : rep.entries) {
            json c{{"bound", e.name}, {"found", json_int(found)}};
            if (!e.applies) {
                c["status"] = "conditional";
            } else {
                const bool ok = found <= e.bound.floor;
                c["limit"] = json_int(e.bound.floor);
                c["status"] = ok ? "ok" : "violated: the declared hypothesis is false or there is a bug";
                violation = violation || !ok;
            }
            cmp.push_back(c);
        }
        out["comparisons"] = cmp;

        if (inst.h % p == 0) {
            violation = chart_checks(cfg, inst, p, set.solutions, out["local"]) || violation;
        } else {
            out["local"] = "p does not divide h; chart, decomposition and census checks need p | h";
        }
        out["pass"] = !violation;
        res.csv_header = {"instance", "B", "count", "p", "pass"};
        res.csv_rows.push_back({src.id, std::to_string(B), found.get_str(), p.get_str(), violation ? "false" : "true"});
        return violation ? kExitViolation : kExitOk;
    });
}

CmdResult cmd_fermat(const FermatConfig& cfg) {
    CmdResult res;
    json out{{"verb", cfg.verb}};
    bool violation = false;
    try {
        if (cfg.verb == "construct") {
            if (!cfg.t1) throw InvalidInput("construct needs --t1");
            FermatTwist tw;
            std::vector<SolutionTriple> pts{*cfg.t1};
            if (cfg.t2) {
                tw = solve_ABC(*cfg.t1, *cfg.t2, cfg.n);
                pts.push_back(*cfg.t2);
                out["twist"] = json_of(tw);
                out["identities"] = satisfies(tw, *cfg.t1) && satisfies(tw, *cfg.t2);
            } else if (cfg.q) {
                const InfiniteOrderReport r = infinite_order_construction(*cfg.t1, *cfg.q, cfg.n);
                tw = r.twist;
                pts.push_back(r.t2);
                out["infinite_order"] = json_of(r);
                violation = r.q_divides_ABC || !r.both_satisfy;
            } else {
                throw InvalidInput("construct needs --t2 or --q");
            }
            if (cfg.quotient) {
                json qs = json::array();
                for (const auto& t : pts) {
                    if (t.z == 0) continue;
                    const QuotientPoint qp = quotient_map(tw, mpq_class(t.x, t.z), mpq_class(t.y, t.z),
                                                          cfg.quotient->first, cfg.quotient->second);
                    qs.push_back(json{{"X", qp.X.get_str()}, {"Y", qp.Y.get_str()}, {"d", qp.d},
                                      {"on_quotient", qp.on_quotient}});
                }
                out["quotient"] = qs;
            }
            res.csv_header = {"A", "B", "C", "n"};
            res.csv_rows.push_back({tw.A.get_str(), tw.B.get_str(), tw.C.get_str(), std::to_string(tw.n)});
        } else if (cfg.verb == "check") {
            if (!cfg.twist || !cfg.p) throw InvalidInput("check needs --A --B --C and --p");
            const CorFermatReport r = cor_fermat_check(*cfg.twist, *cfg.p, cfg.hypothesis, cfg.box);
            out["check"] = json_of(r);
            out["hypothesis"] = cfg.hypothesis.kind == HypKind::none ? json(nullptr) : json(cfg.hypothesis.source);
            violation = r.contradiction;
            res.csv_header = {"p", "box", "classes", "rank_lower_bound", "contradiction"};
            res.csv_rows.push_back({cfg.p->get_str(), std::to_string(cfg.box), std::to_string(r.classes.size()),
                                    r.rank_lower_bound ? "true" : "false", r.contradiction ? "true" : "false"});
        } else if (cfg.verb == "orbit") {
            if (!cfg.t1) throw InvalidInput("orbit needs --t1");
            const OrbitReport r = orbit_count(*cfg.t1, cfg.symmetric, cfg.n, cfg.q.value_or(0));
            out["orbit"] = json_of(r);
            violation = r.distinct != r.expected;
            res.csv_header = {"q", "expected", "distinct"};
            res.csv_rows.push_back({r.q.get_str(), std::to_string(r.expected), std::to_string(r.distinct)});
        } else {
            throw InvalidInput("unknown fermat verb " + cfg.verb);
        }
        res.exit_code = violation ? kExitViolation : kExitOk;
    } catch (const IdentityViolation& e) {
        out["violation"] = e.what();
        res.exit_code = kExitViolation;
    } catch (const ThueError& e) {
        out["error"] = e.what();
        res.exit_code = kExitInput;
    }
    out["pass"] = res.exit_code == kExitOk;
    res.report = out;
    return res;
}

}  // namespace thue
