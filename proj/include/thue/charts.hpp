#pragma once

// Valuation ledgers of the regular charts around a root alpha_i that carry a
// primitive solution, and the disks those charts cut out.

#include "thue/padic.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thue {

struct GammaEntry {
    Valuation v;       // v(alpha_j - alpha_i)
    int multiplicity;  // n(gamma)
    int root = -1;     // tracked root index, -1 in profile mode
};

struct ChartData {
    int root_index = -1;  // -1 in profile mode
    int root_multiplicity = 1;
    Valuation t;
    int e = 1;  // common denominator; all integer fields below are e * v
    std::vector<GammaEntry> gammas;
    std::vector<long long> s_seq;
    std::vector<std::vector<int>> S_sets;  // indices into gammas; -1 is gamma = 0
    std::vector<long long> S_weights;      // sum of n(gamma) over each S_k
    std::vector<long long> u_seq;
    long long w = 0;
};

ChartData build_chart(int root_index, int root_multiplicity, const Valuation& t, std::vector<GammaEntry> gammas,
                      const mpq_class& w);

// Profile mode: the other roots' values v(a - alpha_j b) < t equal v(gamma_j).
// Throws AmbiguousArgmax when t is attained twice.
ChartData chart_from_profile(const SolutionValuationProfile& prof, const mpq_class& w);

// Tracked mode: gamma valuations come from the tracked roots themselves.
ChartData chart_from_tracked(const SolutionValuationProfile& prof, const TrackedRoots& tracked, const mpq_class& w);

bool verify_w_equals_um(const ChartData& chart);

struct DecompEntry {
    mpz_class a, b;
    bool accepted = false;
    std::string reason;  // why a pair was rejected
    std::optional<int> argmax;
    std::optional<Valuation> t;
};

struct DecompReport {
    std::vector<DecompEntry> entries;
    std::vector<std::pair<int, std::vector<Valuation>>> t_by_root;  // accepted pairs grouped by argmax
    bool pass = true;
};

// Pairs that are not primitive solutions of F = h are rejected before the
// comparison; for them t is still reported (from the tracked roots) so the
// failure of the statement without the hypothesis is visible.
DecompReport decomp_check(const ThueInstance& inst, const mpz_class& p,
                          const std::vector<std::pair<mpz_class, mpz_class>>& pairs, const TrackedRoots& tracked);

struct DiskPartition {
    std::vector<std::vector<int>> blocks;  // sorted root indices, sorted blocks
    std::vector<std::optional<Valuation>> block_t;
    std::vector<bool> consistent;
    bool all_consistent = true;
};

// Roots i, j carrying charts merge when v(alpha_i - alpha_j) >= min(t_i, t_j).
DiskPartition disk_partition(const std::vector<std::vector<Valuation>>& diff_vals,
                             const std::vector<std::pair<int, Valuation>>& charts);

struct SpecialFiberShape {
    int r = 0;             // distinct roots in the disk
    int block_degree = 0;  // sum of their multiplicities
    int y_exponent = 0;    // n - block_degree
    // Tracked mode: f_r(u) = prod (u - gamma~_j)^{n_j} over F_q, low degree first.
    std::vector<UnramRing::Elem> reduced;
};

SpecialFiberShape special_fiber_shape(const std::vector<int>& block, int n, const std::vector<int>& multiplicities);
SpecialFiberShape special_fiber_shape(const std::vector<int>& block, int n, const TrackedRoots& tracked, int rep,
                                      int t);

}  // namespace thue
