#pragma once

// JSON views of the toolkit's reports and the corpus file format.

#include "thue/bounds.hpp"
#include "thue/charts.hpp"
#include "thue/enumerate.hpp"
#include "thue/fermat.hpp"
#include "thue/forms.hpp"
#include "thue/padic.hpp"

#include <json.hpp>

#include <gmpxx.h>

#include <string>
#include <vector>

namespace thue {

using json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json json_int(const mpz_class& x);
json json_rat(const mpq_class& x);  // "num/den" unless integral
mpz_class int_from_json(const json& j);

// "1,0,-2" (spaces allowed).
std::vector<mpz_class> parse_int_list(const std::string& s);
mpz_class parse_int(const std::string& s);

struct CorpusEntry {
    std::vector<mpz_class> coeffs;
    mpz_class h;
    std::string notes;
    int line = 0;
};

CorpusEntry parse_corpus_line(const std::string& line, int line_no);
// Blank lines and lines starting with '#' are skipped.
std::vector<CorpusEntry> read_corpus(const std::string& path);

json json_of(const Valuation& v);
json json_of(const FormShape& s);
json json_of(const PrimeCase& pc);
json json_of(const BoundReport& rep);
json json_of(const SolutionSet& set);
json json_of(const ProjectiveCount& pc);
json json_of(const ChartData& c);
json json_of(const DecompReport& rep);
json json_of(const DiskPartition& dp);
json json_of(const Census& c);
json json_of(const FermatTwist& tw);
json json_of(const SolutionTriple& t);
json json_of(const OrbitReport& o);
json json_of(const CorFermatReport& r);
json json_of(const InfiniteOrderReport& r);

}  // namespace thue
