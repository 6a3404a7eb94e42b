#include "thue/cli.hpp"
#include "thue/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

thue::SolutionTriple parse_triple(const std::string& s) {
    const auto v = thue::parse_int_list(s);
    if (v.size() != 3) throw thue::InvalidInput("a triple needs three integers: " + s);
    return {v[0], v[1], v[2]};
}

struct Shared {
    std::optional<std::string> F, h, corpus, p, hypothesis, out, pairs;
    std::optional<long> box;
    std::optional<int> precision;
    unsigned threads = 0;
    std::string format = "json";
};

void add_instance_options(CLI::App* app, Shared& o) {
    app->add_option("--F", o.F, "coefficients c_0,...,c_n of sum c_i x^(n-i) y^i");
    app->add_option("--h", o.h, "right-hand side");
    app->add_option("--corpus", o.corpus, "JSON lines file of {coeffs, h, notes}");
    app->add_option("--p", o.p, "prime override (must exceed n)");
    app->add_option("--box", o.box, "search box B on max(|x|, |y|)")->check(CLI::PositiveNumber);
    app->add_option("--precision", o.precision, "p-adic working precision N")->check(CLI::PositiveNumber);
    app->add_option("--hypothesis", o.hypothesis,
                    "chabauty_lt_g[:cyclotomic] | mw_rank_value:r | mw_lt_threshold:T");
    app->add_option("--threads", o.threads, "enumeration threads (0 = all cores)");
    app->add_option("--pairs", o.pairs, "verify: extra pairs a:b;a:b for the decomposition check");
    app->add_option("--format", o.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    app->add_option("--out", o.out, "write the report here instead of stdout");
}

thue::RunConfig to_config(const Shared& o) {
    thue::RunConfig cfg;
    cfg.instances = thue::load_instances(o.F, o.h, o.corpus);
    if (o.p) cfg.prime = thue::parse_int(*o.p);
    cfg.box = o.box;
    cfg.precision = o.precision;
    if (o.hypothesis) cfg.hypothesis = thue::RankHypothesis::parse(*o.hypothesis);
    cfg.threads = o.threads;
    if (o.pairs) {
        std::stringstream ss(*o.pairs);
        std::string item;
        while (std::getline(ss, item, ';')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos) throw thue::InvalidInput("pairs are written a:b");
            cfg.extra_pairs.emplace_back(thue::parse_int(item.substr(0, colon)), thue::parse_int(item.substr(colon + 1)));
        }
    }
    return cfg;
}

int emit(const thue::CmdResult& r, const std::string& format, const std::optional<std::string>& out) {
    const std::string text = thue::render(r, format);
    if (out) {
        std::ofstream f(*out);
        if (!f) {
            std::cerr << "cannot write " << *out << "\n";
            return thue::kExitInput;
        }
        f << text;
    } else {
        std::cout << text;
    }
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thue equations F(x, y) = h: invariants, bounds, enumeration and local checks"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);

    Shared o;
    auto* analyze = app.add_subcommand("analyze", "shape, genus, d*, prime classification");
    auto* bound = app.add_subcommand("bound", "bound catalogue under the declared hypothesis");
    auto* verify = app.add_subcommand("verify", "enumerate, then check charts, disks, census and bounds");
    auto* enumerate = app.add_subcommand("enumerate", "primitive solutions in a box");
    for (auto* sc : {analyze, bound, verify, enumerate}) add_instance_options(sc, o);

    auto* fermat = app.add_subcommand("fermat", "twists A x^n + B y^n = C z^n");
    fermat->require_subcommand(1);
    std::string t1, t2, A, B, C, q, p, hyp, quotient;
    int n = 0;
    bool symmetric = false;
    long fbox = 100;
    std::string fformat = "json";
    std::optional<std::string> fout;
    auto* construct = fermat->add_subcommand("construct", "twist through two triples, or t1 and t1 + (q, q, q)");
    auto* check = fermat->add_subcommand("check", "solution classes for n = p - 1 against a rank hypothesis");
    auto* orbit = fermat->add_subcommand("orbit", "roots-of-unity orbit of a triple over F_q");
    for (auto* sc : {construct, check, orbit}) {
        sc->add_option("--format", fformat)->check(CLI::IsMember({"json", "csv", "text"}));
        sc->add_option("--out", fout);
    }
    construct->add_option("--t1", t1)->required();
    construct->add_option("--t2", t2);
    construct->add_option("--q", q);
    construct->add_option("--n", n)->required();
    construct->add_option("--quotient", quotient, "exponents a,b of (x^n, x^a y^b)");
    check->add_option("--A", A)->required();
    check->add_option("--B", B)->required();
    check->add_option("--C", C)->required();
    check->add_option("--p", p)->required();
    check->add_option("--box", fbox);
    check->add_option("--hypothesis", hyp);
    orbit->add_option("--t1", t1)->required();
    orbit->add_option("--n", n)->required();
    orbit->add_option("--q", q);
    orbit->add_flag("--symmetric", symmetric, "include the swap (x, y) -> (y, x), for A = B");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fermat->parsed()) {
            thue::FermatConfig fc;
            fc.n = n;
            if (!t1.empty()) fc.t1 = parse_triple(t1);
            if (!t2.empty()) fc.t2 = parse_triple(t2);
            if (!q.empty()) fc.q = thue::parse_int(q);
            fc.symmetric = symmetric;
            fc.box = fbox;
            if (construct->parsed()) {
                fc.verb = "construct";
                if (!quotient.empty()) {
                    const auto e = thue::parse_int_list(quotient);
                    if (e.size() != 2) throw thue::InvalidInput("--quotient needs a,b");
                    fc.quotient = std::make_pair(static_cast<int>(e[0].get_si()), static_cast<int>(e[1].get_si()));
                }
            } else if (check->parsed()) {
                fc.verb = "check";
                const long e = thue::parse_int(p).get_si() - 1;
                fc.twist = thue::FermatTwist{thue::parse_int(A), thue::parse_int(B), thue::parse_int(C),
                                             static_cast<int>(e)};
                fc.p = thue::parse_int(p);
                if (!hyp.empty()) fc.hypothesis = thue::RankHypothesis::parse(hyp);
            } else {
                fc.verb = "orbit";
            }
            return emit(thue::cmd_fermat(fc), fformat, fout);
        }
        const thue::RunConfig cfg = to_config(o);
        if (analyze->parsed()) return emit(thue::cmd_analyze(cfg), o.format, o.out);
        if (bound->parsed()) return emit(thue::cmd_bound(cfg), o.format, o.out);
        if (verify->parsed()) return emit(thue::cmd_verify(cfg), o.format, o.out);
        return emit(thue::cmd_enumerate(cfg), o.format, o.out);
    } catch (const thue::ThueError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return thue::kExitInput;
    } catch (const thue::IdentityViolation& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return thue::kExitViolation;
    }
}
