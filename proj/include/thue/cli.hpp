#pragma once

// Orchestration behind the thuetool subcommands. Each command returns a JSON
// report plus a CSV table; rendering and argument parsing live in the tool.

#include "thue/bounds.hpp"
#include "thue/enumerate.hpp"
#include "thue/fermat.hpp"
#include "thue/json_io.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thue {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitInput = 3;

struct InstanceSource {
    std::string id;
    std::vector<mpz_class> coeffs;
    mpz_class h;
    std::string notes;
};

struct RunConfig {
    std::vector<InstanceSource> instances;
    std::optional<mpz_class> prime;  // must exceed n
    std::optional<long> box;
    std::optional<int> precision;
    RankHypothesis hypothesis;  // kind none when undeclared
    std::vector<IntPair> extra_pairs;  // verify: fed to decomp_check next to the enumerated solutions
    unsigned threads = 0;
};

// Instances from --F/--h, or one per corpus line.
std::vector<InstanceSource> load_instances(const std::optional<std::string>& coeffs,
                                           const std::optional<std::string>& h,
                                           const std::optional<std::string>& corpus);

struct CmdResult {
    json report;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    int exit_code = kExitOk;
};

std::string render(const CmdResult& r, const std::string& format);

CmdResult cmd_analyze(const RunConfig& cfg);
CmdResult cmd_bound(const RunConfig& cfg);
CmdResult cmd_verify(const RunConfig& cfg);
CmdResult cmd_enumerate(const RunConfig& cfg);

struct FermatConfig {
    std::string verb;  // construct | check | orbit
    int n = 0;
    std::optional<SolutionTriple> t1, t2;
    std::optional<mpz_class> q;
    bool symmetric = false;
    std::optional<FermatTwist> twist;  // check
    std::optional<mpz_class> p;        // check
    long box = 100;
    RankHypothesis hypothesis;
    std::optional<std::pair<int, int>> quotient;  // construct: exponents (a, b)
};

CmdResult cmd_fermat(const FermatConfig& cfg);

}  // namespace thue
