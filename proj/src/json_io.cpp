#include "thue/json_io.hpp"

#include "thue/errors.hpp"

#include <fstream>
#include <sstream>

namespace thue {

json json_int(const mpz_class& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

json json_rat(const mpq_class& x) {
    if (x.get_den() == 1) return json_int(x.get_num());
    return x.get_str();
}

mpz_class parse_int(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    mpz_class x;
    if (t.empty() || x.set_str(t, 10) != 0) throw InvalidInput("not an integer: '" + s + "'");
    return x;
}

mpz_class int_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw InvalidInput("expected an integer, got " + j.dump());
}

std::vector<mpz_class> parse_int_list(const std::string& s) {
    std::vector<mpz_class> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
    if (out.empty()) throw InvalidInput("empty integer list");
    return out;
}

CorpusEntry parse_corpus_line(const std::string& line, int line_no) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw InvalidInput("corpus line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!j.contains("coeffs") || !j.contains("h"))
        throw InvalidInput("corpus line " + std::to_string(line_no) + ": needs coeffs and h");
    CorpusEntry e;
    e.line = line_no;
    for (const auto& c : j.at("coeffs")) e.coeffs.push_back(int_from_json(c));
    e.h = int_from_json(j.at("h"));
    if (j.contains("notes")) e.notes = j.at("notes").get<std::string>();
    return e;
}

std::vector<CorpusEntry> read_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open corpus file " + path);
    std::vector<CorpusEntry> out;
    std::string line;
    for (int no = 1; std::getline(in, line); ++no) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(parse_corpus_line(line, no));
    }
    return out;
}

json json_of(const Valuation& v) { return v.str(); }

json json_of(const FormShape& s) {
    json j;
    j["s"] = s.s;
    j["multiplicities"] = s.multiplicities;
    j["c"] = json_int(s.c);
    j["degree_deficit"] = s.degree_deficit;
    json rad = json::array();
    for (const auto& c : s.radical) rad.push_back(json_int(c));
    j["radical"] = rad;
    return j;
}

json json_of(const PrimeCase& pc) {
    return json{{"p", json_int(pc.p)},
                {"p_divides_h", pc.divides_h},
                {"p_divides_dstar", pc.divides_dstar},
                {"case", std::string(1, case_letter(pc.tag))}};
}

json json_of(const BoundReport& rep) {
    json j;
    j["instance"] = rep.instance_id;
    j["n"] = rep.n;
    j["g"] = rep.g;
    j["s"] = rep.s;
    j["prime"] = json_of(rep.prime_case);
    j["hypothesis"] = rep.hypothesis.kind == HypKind::none ? json(nullptr) : json(rep.hypothesis.source);
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json x{{"name", e.name}, {"quantity", quantity_name(e.quantity)}, {"formula", e.formula}};
        if (e.applies) {
            x["status"] = "applies";
            x["bound"] = json_int(e.bound.floor);
            if (e.bound.value.get_den() != 1) x["exact"] = e.bound.value.get_str();
        } else {
            x["status"] = rep.hypothesis.kind == HypKind::none ? "conditional, hypothesis unset" : "conditional";
        }
        x["condition"] = e.condition;
        entries.push_back(x);
    }
    j["entries"] = entries;
    j["findings"] = rep.findings;
    j["notes"] = rep.notes;
    return j;
}

json json_of(const SolutionSet& set) {
    json sols = json::array();
    for (const auto& [a, b] : set.solutions) sols.push_back(json::array({json_int(a), json_int(b)}));
    return json{{"instance", set.instance_id},
                {"B", set.B},
                {"exhaustive_within_box", set.exhaustive},
                {"count", set.solutions.size()},
                {"solutions", sols}};
}

json json_of(const ProjectiveCount& pc) {
    return json{{"count", pc.count},
                {"affine", pc.affine},
                {"at_infinity", pc.at_infinity},
                {"weil_ok", pc.weil_ok},
                {"projection_ok", pc.projection_ok}};
}

json json_of(const ChartData& c) {
    json gam = json::array();
    for (const auto& g : c.gammas) gam.push_back(json{{"v", g.v.str()}, {"n", g.multiplicity}, {"root", g.root}});
    return json{{"root", c.root_index}, {"t", c.t.str()},     {"e", c.e},       {"gammas", gam},
                {"s", c.s_seq},         {"S", c.S_sets},      {"S_weights", c.S_weights},
                {"u", c.u_seq},         {"w", c.w},           {"w_equals_um", verify_w_equals_um(c)}};
}

json json_of(const DecompReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json x{{"pair", json::array({json_int(e.a), json_int(e.b)})}, {"accepted", e.accepted}};
        if (!e.reason.empty()) x["rejected"] = e.reason;
        if (e.argmax) x["argmax"] = *e.argmax;
        if (e.t) x["t"] = e.t->str();
        entries.push_back(x);
    }
    json groups = json::array();
    for (const auto& [root, ts] : rep.t_by_root) {
        json tv = json::array();
        for (const auto& t : ts) tv.push_back(t.str());
        groups.push_back(json{{"root", root}, {"t", tv}});
    }
    return json{{"pass", rep.pass}, {"entries", entries}, {"groups", groups}};
}

json json_of(const DiskPartition& dp) {
    json blocks = json::array();
    for (std::size_t k = 0; k < dp.blocks.size(); ++k)
        blocks.push_back(json{{"roots", dp.blocks[k]},
                              {"t", dp.block_t[k] ? json(dp.block_t[k]->str()) : json(nullptr)},
                              {"consistent", static_cast<bool>(dp.consistent[k])}});
    return json{{"blocks", blocks}, {"all_consistent", dp.all_consistent}};
}

json json_of(const Census& c) {
    json entries = json::array();
    for (const auto& e : c.entries) {
        json x{{"pair", json::array({json_int(e.a), json_int(e.b)})}, {"t", e.t.str()}};
        if (c.residue_granularity) {
            json u = json::array();
            for (const auto& d : e.ubar) u.push_back(json_int(d));
            x["root"] = e.argmax;
            x["block"] = e.block;
            x["ubar"] = u;
            x["bbar"] = json_int(e.bbar);
            x["fiber_ok"] = e.fiber_ok;
        }
        entries.push_back(x);
    }
    json j{{"p", json_int(c.p)},
           {"granularity", c.residue_granularity ? "residue" : "disk"},
           {"classes", c.class_count},
           {"entries", entries}};
    if (c.prime_case) j["case"] = std::string(1, *c.prime_case);
    if (c.class_bound) j["class_bound"] = *c.class_bound;
    j["within_bound"] = c.within_bound;
    j["fiber_identity_ok"] = c.fiber_identity_ok;
    return j;
}

json json_of(const FermatTwist& tw) {
    return json{{"A", json_int(tw.A)}, {"B", json_int(tw.B)}, {"C", json_int(tw.C)}, {"n", tw.n}};
}

json json_of(const SolutionTriple& t) { return json::array({json_int(t.x), json_int(t.y), json_int(t.z)}); }

json json_of(const OrbitReport& o) {
    return json{{"expected", o.expected}, {"distinct", o.distinct}, {"q", json_int(o.q)}, {"zeta", json_int(o.zeta)}};
}

json json_of(const CorFermatReport& r) {
    json cls = json::array();
    for (const auto& t : r.classes) cls.push_back(json_of(t));
    return json{{"p", json_int(r.p)},
                {"box", r.box},
                {"classes", cls},
                {"symmetric_offdiagonal", r.symmetric_offdiagonal},
                {"rank_lower_bound", r.rank_lower_bound},
                {"hypothesis_asserted", r.hypothesis_asserted},
                {"contradiction", r.contradiction},
                {"conclusion", r.conclusion}};
}

json json_of(const InfiniteOrderReport& r) {
    return json{{"t2", json_of(r.t2)},
                {"twist", json_of(r.twist)},
                {"coprime", r.coprime},
                {"q_divides_ABC", r.q_divides_ABC},
                {"both_satisfy", r.both_satisfy},
                {"asserted_not_checked", r.asserted}};
}

}  // namespace thue
