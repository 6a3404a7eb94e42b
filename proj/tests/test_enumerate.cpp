#include "oracles.hpp"

#include "thue/bounds.hpp"
#include "thue/enumerate.hpp"
#include "thue/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace thue;

namespace {

ThueInstance inst_of(std::vector<mpz_class> c, const mpz_class& h) {
    return make_instance(BinaryForm::from_coeffs(std::move(c)), h);
}

std::vector<oracle::Pair> as_pairs(const std::vector<IntPair>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("x^4 + y^4 = 17") {
    const auto sol = primitive_solutions(inst_of({1, 0, 0, 0, 1}, 17), {100}, 1);
    CHECK(sol.solutions.size() == 8);
    CHECK(std::is_sorted(sol.solutions.begin(), sol.solutions.end()));
    CHECK(std::find(sol.solutions.begin(), sol.solutions.end(), IntPair{1, 2}) != sol.solutions.end());
    CHECK(sol.exhaustive);
}

TEST_CASE("small instances") {
    CHECK(primitive_solutions(inst_of({1, 0, 0, 0, 1}, 3), {200}).solutions.empty());
    const auto s = primitive_solutions(inst_of({1, 0, 0, -2}, 1), {200});
    CHECK(std::find(s.solutions.begin(), s.solutions.end(), IntPair{1, 0}) != s.solutions.end());
    CHECK(std::find(s.solutions.begin(), s.solutions.end(), IntPair{-1, -1}) != s.solutions.end());
}

TEST_CASE("box search agrees with the naive double loop") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> c(-6, 6), deg(3, 6), pt(-9, 9);
    int done = 0;
    while (done < 30) {
        const int n = deg(rng);
        std::vector<mpz_class> co(n + 1);
        for (auto& x : co) x = c(rng);
        if (co[0] == 0) co[0] = 1;
        mpz_class x0 = pt(rng), y0 = pt(rng);
        if (gcd(x0, y0) != 1) continue;
        const mpz_class h = oracle::eval_form(co, x0, y0);
        if (h == 0) continue;
        ThueInstance inst;
        try {
            inst = inst_of(co, h);
        } catch (const ThueError&) {
            continue;
        }
        if (inst.content_divisor != 1) continue;
        const long B = 25;
        auto want = oracle::naive_solutions(co, h, B);
        std::sort(want.begin(), want.end());
        const auto got = primitive_solutions(inst, {B}, 2);
        CHECK(as_pairs(got.solutions) == want);
        ++done;
    }
}

TEST_CASE("a larger box only adds solutions") {
    const auto inst = inst_of({1, 0, 0, 0, 1}, 17);
    const auto s1 = primitive_solutions(inst, {10});
    const auto s2 = primitive_solutions(inst, {50});
    for (const auto& x : s1.solutions) CHECK(std::find(s2.solutions.begin(), s2.solutions.end(), x) != s2.solutions.end());
    // the mpz path must agree with the 128-bit one
    const auto big = inst_of({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, 2);
    const auto sb = primitive_solutions(big, {600});
    CHECK(as_pairs(sb.solutions) == std::vector<oracle::Pair>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
}

TEST_CASE("affine point counts") {
    const auto q = inst_of({1, 0, 0, 0, 1}, 17);
    CHECK(count_affine_points_mod_p(q, 5) == 16);
    CHECK(count_affine_points_mod_p(inst_of({1, 0, 0, 0, 1}, 3), 5) == 0);
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> c(-20, 20);
    for (long p : {5L, 7L, 11L, 13L}) {
        for (int it = 0; it < 10; ++it) {
            std::vector<mpz_class> co{1, c(rng), c(rng), c(rng), c(rng)};
            mpz_class h = c(rng);
            if (h == 0) h = 1;
            ThueInstance inst;
            try {
                inst = inst_of(co, h);
            } catch (const ThueError&) {
                continue;
            }
            CHECK(count_affine_points_mod_p(inst, p) == oracle::naive_affine_count(co, h, p));
        }
    }
}

TEST_CASE("projective counts on smooth reductions") {
    const auto q = inst_of({1, 0, 0, 0, 1}, 17);
    CHECK(smooth_mod_p(q, 5));
    const auto pc = count_projective_smooth(q, 5);
    CHECK(pc.affine == 16);
    CHECK(pc.at_infinity == 0);
    CHECK(pc.count == 16);
    CHECK(pc.weil_ok);
    CHECK(pc.projection_ok);
    CHECK(pc.count <= projection_point_bound(4, 5, true));
    CHECK_FALSE(smooth_mod_p(inst_of({1, 0, 0, 0, 1}, 5), 5));
    CHECK_THROWS_AS(count_projective_smooth(inst_of({1, 0, 0, 0, 1}, 5), 5), CaseMismatch);
    // Weil on a spread of smooth curves
    for (long p : {7L, 11L, 13L, 17L, 19L, 23L})
        for (int h = 1; h < 6; ++h) {
            const auto inst = inst_of({1, 0, 1, 0, 3}, h);
            if (!smooth_mod_p(inst, p)) continue;
            const auto r = count_projective_smooth(inst, p);
            CHECK(r.weil_ok);
            CHECK(r.projection_ok);
        }
    CHECK(count_roots_p1(BinaryForm::from_coeffs({0, 1, -1}), 5) == 2);
    CHECK(count_roots_p1(BinaryForm::from_coeffs({1, 0, 1}), 5) == 2);
    CHECK(count_roots_p1(BinaryForm::from_coeffs({1, 0, 1}), 7) == 0);
}

TEST_CASE("family generators") {
    const auto fam = example_family({0, 1, 2, 3}, 5);
    CHECK(fam.certified.size() == 8);
    const auto sol = primitive_solutions(fam.inst, {100});
    for (const auto& c : fam.certified)
        CHECK(std::find(sol.solutions.begin(), sol.solutions.end(), c) != sol.solutions.end());

    const auto ex = example_family_extra({0, 1, 2, 3}, 2);
    CHECK(ex.a_list[0] == 8);
    CHECK(ex.inst.h == (1 - 2) * (1 - 4) * (1 - 6));
    CHECK(std::find(ex.certified.begin(), ex.certified.end(), IntPair{1, 2}) != ex.certified.end());
    CHECK(std::find(ex.certified.begin(), ex.certified.end(), IntPair{-1, -2}) != ex.certified.end());
    CHECK_THROWS_AS(example_family({1, 1}, 3), InvalidInput);
    CHECK_THROWS_AS(example_family_extra({0, 1}, 1), InvalidInput);
}

TEST_CASE("S and T sets") {
    const auto inst = inst_of({1, 0, 0, 0, 1}, 17);
    const auto m = classify_S_T(inst, {{1, 2, 1}, {2, 4, 2}, {-2, 1, -1}}, 2);
    REQUIRE(m.size() == 3);
    CHECK(m[0].set == OtherSet::S);
    CHECK(m[0].index == 0);
    CHECK(m[1].point.x == 1);  // made primitive
    const auto m2 = classify_S_T(inst_of({1, 0, 0, 0, 1}, 2), {{1, 1, 1}}, 3);
    CHECK(m2[0].set == OtherSet::S);
    // h = 32 = 2 * 2^4: (2, 2, 1) lies in S_1 and maps to h' = 2
    const auto inst32 = inst_of({1, 0, 0, 0, 1}, 32);
    const auto s1 = classify_S_T(inst32, {{2, 2, 1}}, 2);
    CHECK(s1[0].set == OtherSet::S);
    CHECK(s1[0].index == 1);
    CHECK(s1[0].target_h == 2);
    // z^2 = x^2 + y^2 at (3, 4, 5) lies in T_1 and maps to 25 z^2 = x^2 + y^2
    const auto t1 = classify_S_T(inst_of({1, 0, 1}, 1), {{3, 4, 5}}, 5);
    CHECK(t1[0].set == OtherSet::T);
    CHECK(t1[0].index == 1);
    CHECK(t1[0].target_h == 25);
    CHECK(t1[0].image.z == 1);
    CHECK_THROWS_AS(classify_S_T(inst, {{0, 0, 0}}, 2), InvalidInput);
    CHECK_THROWS_AS(classify_S_T(inst, {{1, 1, 1}}, 2), InvalidInput);
}

TEST_CASE("residue class census on the chart example") {
    const auto inst = inst_of({1, -35, 150, 0}, -2500);
    const auto tr = hensel_track_roots(inst.shape, 5, default_precision(inst, 5) + 2);
    const auto cen = residue_class_census(inst, {{25, 1}}, 5, &tr);
    REQUIRE(cen.entries.size() == 1);
    CHECK(cen.entries[0].t == Valuation::of(2));
    CHECK(cen.entries[0].ubar == std::vector<mpz_class>{1});
    CHECK(cen.entries[0].bbar == 1);
    CHECK(cen.entries[0].fiber_ok);
    CHECK(cen.class_count == 1);
    CHECK(cen.prime_case == 'd');
    CHECK(cen.class_bound == 45);
    CHECK(cen.within_bound);
}

TEST_CASE("census over family solutions") {
    // x(x - y)(x - 2y)(x - 3y) + 5^3 y^4 at p = 5
    const auto fam = example_family({0, 1, 2, 3}, 125);
    const auto sol = primitive_solutions(fam.inst, {200});
    const auto tr = hensel_track_roots(fam.inst.shape, 5, default_precision(fam.inst, 5) + 2);
    const auto cen = residue_class_census(fam.inst, sol.solutions, 5, &tr);
    CHECK(cen.fiber_identity_ok);
    CHECK(cen.within_bound);
    CHECK(cen.entries.size() == sol.solutions.size());
    const auto loose = residue_class_census(fam.inst, sol.solutions, 5, nullptr);
    CHECK_FALSE(loose.residue_granularity);
    CHECK(loose.class_count <= cen.class_count);
}
