#include "oracles.hpp"

#include "thue/charts.hpp"
#include "thue/errors.hpp"

#include <doctest.h>

using namespace thue;

namespace {

ThueInstance inst_of(std::vector<mpz_class> c, const mpz_class& h) {
    return make_instance(BinaryForm::from_coeffs(std::move(c)), h);
}

}  // namespace

TEST_CASE("chart at (25, 1) on x (x - 5y)(x - 30y)") {
    const auto inst = inst_of({1, -35, 150, 0}, -2500);
    const auto tr = hensel_track_roots(inst.shape, 5, 10);
    const auto prof = solution_valuations(25, 1, inst, 5, &tr);
    const auto c = chart_from_tracked(prof, tr, 4);
    CHECK(c.e == 1);
    CHECK(c.s_seq == std::vector<long long>{0, 1, 2});
    CHECK(c.S_weights == std::vector<long long>{0, 2, 1});
    CHECK(c.S_sets[2] == std::vector<int>{-1});
    CHECK(c.S_sets[1].size() == 2);
    // u_k = sum_{j<=k} N_j s_j + sum_{j>k} N_j s_k
    CHECK(c.u_seq == std::vector<long long>{0, 3, 4});
    CHECK(c.w == 4);
    CHECK(verify_w_equals_um(c));

    const auto pc = chart_from_profile(solution_valuations(25, 1, inst, 5), 4);
    CHECK(pc.u_seq == c.u_seq);
}

TEST_CASE("chart with a lone root") {
    const auto c = build_chart(0, 1, Valuation::of(1), {{Valuation::of(0), 1, 1}, {Valuation::of(0), 2, 2}}, 1);
    CHECK(c.s_seq == std::vector<long long>{0, 1});
    CHECK(c.u_seq.back() == 1);
    CHECK(verify_w_equals_um(c));
}

TEST_CASE("fractional valuations are rescaled") {
    const auto c = build_chart(-1, 1, Valuation::of(mpq_class(3, 2)), {{Valuation::of(mpq_class(1, 2)), 1, -1}}, mpq_class(2));
    CHECK(c.e == 2);
    CHECK(c.s_seq == std::vector<long long>{0, 1, 3});
    CHECK(c.u_seq.back() == 4);
    CHECK(c.w == 4);
}

TEST_CASE("profile mode refuses a tie") {
    // (x - y)(x - 3y) at (5, 1), p = 2: v(4) = 2, v(2) = 1
    const auto inst = inst_of(oracle::form_from_linear({{1, 1}, {1, 3}}), oracle::eval_form(oracle::form_from_linear({{1, 1}, {1, 3}}), 5, 1));
    const auto prof = solution_valuations(5, 1, inst, 2);
    CHECK_FALSE(prof.tie);
    SolutionValuationProfile tied = prof;
    tied.per_root[1].v = tied.per_root[0].v = tied.t;
    tied.tie = true;
    CHECK_THROWS_AS(chart_from_profile(tied, 3), AmbiguousArgmax);
}

TEST_CASE("w = u_m on every small primitive solution with p | h") {
    const mpz_class p = 5;
    const std::vector<std::vector<oracle::Pair>> forms{
        {{1, 0}, {1, 5}, {1, 30}},
        {{1, 1}, {1, 26}, {1, 7}},
        {{1, 2}, {1, -3}, {1, 12}, {1, 4}},
    };
    for (const auto& fac : forms) {
        const auto c = oracle::form_from_linear(fac);
        for (int a = -40; a <= 40; ++a)
            for (int b = 1; b <= 12; ++b) {
                if (std::gcd(a, b) != 1) continue;
                const mpz_class h = oracle::eval_form(c, a, b);
                if (h == 0 || h % p != 0) continue;
                const auto inst = inst_of(c, h);
                const auto tr = hensel_track_roots(inst.shape, p, default_precision(inst, p) + 2);
                const auto prof = solution_valuations(a, b, inst, p, &tr);
                const auto ch = chart_from_tracked(prof, tr, oracle::vp(h, p));
                CHECK(verify_w_equals_um(ch));
            }
    }
}

TEST_CASE("decomposition check") {
    SUBCASE("counterexample family is rejected at primitivity") {
        for (const long p : {3L, 5L, 7L})
            for (int d = 1; d <= 2; ++d) {
                std::vector<oracle::Pair> fac{{1, 1}, {1, p * p}};
                for (int k = 0; k < d; ++k) fac.emplace_back(1, p * p - p + 1);
                const auto c = oracle::form_from_linear(fac);
                const mpz_class h = oracle::powz(p, d + 2);
                CHECK(oracle::eval_form(c, p * p + 1, 1) == h);
                CHECK(oracle::eval_form(c, p, 0) == h);
                const auto inst = inst_of(c, h);
                const auto tr = hensel_track_roots(inst.shape, p, 12);
                const auto rep = decomp_check(inst, p, {{p * p + 1, 1}, {p, 0}}, tr);
                REQUIRE(rep.entries.size() == 2);
                CHECK(rep.entries[0].accepted);
                CHECK_FALSE(rep.entries[1].accepted);
                CHECK(rep.entries[1].reason.find("not primitive") != std::string::npos);
                // without the hypothesis the two t values differ
                CHECK(*rep.entries[0].t == Valuation::of(2));
                CHECK(*rep.entries[1].t == Valuation::of(1));
                CHECK(rep.pass);
            }
    }
    SUBCASE("single solution passes") {
        const auto inst = inst_of({1, -35, 150, 0}, -2500);
        const auto tr = hensel_track_roots(inst.shape, 5, 10);
        CHECK(decomp_check(inst, 5, {{25, 1}}, tr).pass);
    }
}

TEST_CASE("disk partition") {
    const auto V = [](int v) { return Valuation::of(v); };
    const auto I = Valuation::inf();
    SUBCASE("two close roots merge") {
        const std::vector<std::vector<Valuation>> d{{I, V(3)}, {V(3), I}};
        const auto dp = disk_partition(d, {{0, V(2)}, {1, V(2)}});
        CHECK(dp.blocks.size() == 1);
        CHECK(dp.all_consistent);
    }
    SUBCASE("distant roots stay apart") {
        const std::vector<std::vector<Valuation>> d{{I, V(0), V(0)}, {V(0), I, V(0)}, {V(0), V(0), I}};
        const auto dp = disk_partition(d, {{0, V(1)}, {1, V(2)}, {2, V(1)}});
        CHECK(dp.blocks.size() == 3);
    }
    SUBCASE("no charts") {
        const std::vector<std::vector<Valuation>> d{{I, V(0)}, {V(0), I}};
        const auto dp = disk_partition(d, {});
        CHECK(dp.blocks.size() == 2);
        CHECK(dp.all_consistent);
    }
}

TEST_CASE("special fiber shapes") {
    auto sh = special_fiber_shape({0}, 4, std::vector<int>{1, 1, 1, 1});
    CHECK(sh.r == 1);
    CHECK(sh.y_exponent == 3);
    sh = special_fiber_shape({0, 1, 2, 3}, 4, std::vector<int>{1, 1, 1, 1});
    CHECK(sh.y_exponent == 0);
    sh = special_fiber_shape({0, 1}, 4, std::vector<int>{1, 1, 1, 1});
    CHECK(sh.r == 2);
    CHECK(sh.y_exponent == 2);

    const auto inst = inst_of(oracle::form_from_linear({{1, 0}, {1, 25}, {1, 7}}), 1);
    const auto tr = hensel_track_roots(inst.shape, 5, 8);
    int r0 = -1, r25 = -1;
    for (int i = 0; i < 3; ++i) {
        if (tr.roots[i].value[0] == 0) r0 = i;
        if (tr.roots[i].value[0] == 25) r25 = i;
    }
    REQUIRE(r0 >= 0);
    REQUIRE(r25 >= 0);
    const auto ts = special_fiber_shape({r0, r25}, 3, tr, r0, 2);
    // (u - 0)(u - 25/25) = u^2 - u
    REQUIRE(ts.reduced.size() == 3);
    CHECK(ts.reduced[0][0] == 0);
    CHECK(ts.reduced[1][0] == 4);
    CHECK(ts.reduced[2][0] == 1);
}
