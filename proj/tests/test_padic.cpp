#include "oracles.hpp"

#include "thue/arith.hpp"
#include "thue/errors.hpp"
#include "thue/padic.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace thue;

namespace {

std::vector<std::string> strs(const std::vector<Valuation>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.str());
    std::sort(out.begin(), out.end());
    return out;
}

ThueInstance inst_of(std::vector<mpz_class> c, const mpz_class& h) {
    return make_instance(BinaryForm::from_coeffs(std::move(c)), h);
}

}  // namespace

TEST_CASE("valuation strings") {
    CHECK(Valuation::of(mpq_class(1, 2)).str() == "1/2");
    CHECK(Valuation::of(3).str() == "3/1");
    CHECK(Valuation::inf().str() == "inf");
    CHECK(Valuation::parse("3/6") == Valuation::of(mpq_class(1, 2)));
    CHECK(Valuation::parse("inf").infinite);
    CHECK(Valuation::of(5) < Valuation::inf());
}

TEST_CASE("Newton polygon examples") {
    CHECK(strs(root_valuations({-5, 0, 1}, 5)) == std::vector<std::string>{"1/2", "1/2"});
    CHECK(strs(root_valuations({-25, 0, 1}, 5)) == std::vector<std::string>{"1/1", "1/1"});
    CHECK(strs(root_valuations({5, -6, 1}, 5)) == std::vector<std::string>{"0/1", "1/1"});
    CHECK(strs(root_valuations({0, 0, 1}, 5)) == std::vector<std::string>{"inf", "inf"});
    CHECK_THROWS_AS(newton_polygon({}, 5), InvalidInput);
}

TEST_CASE("root valuations match constructed rational roots") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> e(0, 3), u(1, 30), deg(1, 6), sign(0, 1);
    for (const long p : {2L, 3L, 5L, 7L}) {
        for (int it = 0; it < 40; ++it) {
            std::vector<oracle::Pair> fac;
            std::vector<std::string> expect;
            const int n = deg(rng);
            for (int k = 0; k < n; ++k) {
                // root r / q with v(r) = er, v(q) = eq
                const int er = e(rng), eq = e(rng);
                mpz_class r = u(rng), q = u(rng);
                while (r % p == 0) ++r;
                while (q % p == 0) ++q;
                r *= oracle::powz(p, er) * (sign(rng) ? 1 : -1);
                q *= oracle::powz(p, eq);
                const mpz_class g = gcd(r, q);
                fac.emplace_back(q / g, r / g);
                expect.push_back(Valuation::of(mpq_class(er - eq)).str());
            }
            std::sort(expect.begin(), expect.end());
            auto c = oracle::form_from_linear(fac);
            IntPoly f(c.rbegin(), c.rend());  // F(x, 1), lowest degree first
            CHECK(strs(root_valuations(f, p)) == expect);
        }
    }
}

TEST_CASE("difference valuations") {
    auto dv = [](std::vector<mpz_class> c, long p) { return strs(difference_valuations(factor_shape(BinaryForm::from_coeffs(c)), p)); };
    CHECK(dv({1, -5, 0}, 5) == std::vector<std::string>{"1/1", "1/1"});
    const auto c = oracle::form_from_linear({{1, 0}, {1, 1}, {1, 6}});
    CHECK(dv(c, 5) == std::vector<std::string>{"0/1", "0/1", "0/1", "0/1", "1/1", "1/1"});
    CHECK(dv({1, 0, 1}, 5) == std::vector<std::string>{"0/1", "0/1"});
}

TEST_CASE("difference resolvent vanishes at root differences") {
    // roots 1, 2, 4
    const IntPoly f{-8, 14, -7, 1};
    const IntPoly R = difference_resolvent(f);
    for (int a : {1, 2, 4})
        for (int b : {1, 2, 4})
            if (a != b) CHECK(eval(R, mpz_class(a - b)) == 0);
    CHECK(degree(R) == 6);
}

TEST_CASE("hensel tracking examples") {
    SUBCASE("x^2 - 2 at 7") {
        const auto tr = hensel_track_roots(factor_shape(BinaryForm::from_coeffs({1, 0, -2})), 7, 3);
        REQUIRE(tr.roots.size() == 2);
        bool found = false;
        for (const auto& r : tr.roots) {
            CHECK((r.value[0] * r.value[0] - 2) % 343 == 0);
            found = found || r.value[0] == 108;
        }
        CHECK(found);
    }
    SUBCASE("x^2 - 5 is ramified") {
        CHECK_THROWS_AS(hensel_track_roots(factor_shape(BinaryForm::from_coeffs({1, 0, -5})), 5, 4), RamifiedCase);
    }
    SUBCASE("(x - 1)(x - 2)") {
        const auto tr = hensel_track_roots(factor_shape(BinaryForm::from_coeffs({1, -3, 2})), 5, 2);
        std::vector<mpz_class> v;
        for (const auto& r : tr.roots) v.push_back(r.value[0]);
        std::sort(v.begin(), v.end());
        CHECK(v == std::vector<mpz_class>{1, 2});
    }
    SUBCASE("x^2 + 1 at 3 needs the quadratic extension") {
        const auto tr = hensel_track_roots(factor_shape(BinaryForm::from_coeffs({1, 0, 1})), 3, 4);
        CHECK(tr.ring.degree() == 2);
        for (const auto& r : tr.roots) {
            const auto sq = tr.ring.add(tr.ring.mul(r.value, r.value), tr.ring.one());
            CHECK(tr.ring.val(sq) >= 4);
        }
    }
    SUBCASE("leading coefficient divisible by p") {
        CHECK_THROWS_AS(hensel_track_roots(factor_shape(BinaryForm::from_coeffs({5, 1, 1})), 5, 4), InvalidInput);
    }
}

TEST_CASE("tracked roots agree with constructed integer roots") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> r(-60, 60), deg(2, 6);
    for (const long p : {3L, 5L, 7L}) {
        for (int it = 0; it < 25; ++it) {
            std::vector<mpz_class> roots;
            const int n = deg(rng);
            while (static_cast<int>(roots.size()) < n) {
                mpz_class x = r(rng);
                if (std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
            }
            std::vector<oracle::Pair> fac;
            for (const auto& x : roots) fac.emplace_back(1, x);
            const auto shape = factor_shape(BinaryForm::from_coeffs(oracle::form_from_linear(fac)));
            const int N = 8;
            const auto tr = hensel_track_roots(shape, p, N);
            REQUIRE(tr.roots.size() == roots.size());
            const mpz_class pN = oracle::powz(p, N);
            std::vector<mpz_class> got, want;
            for (const auto& t : tr.roots) got.push_back(mod(t.value[0], pN));
            for (const auto& x : roots) want.push_back(mod(x, pN));
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);
            // pairwise valuations against direct integer differences
            const auto dm = tr.difference_matrix();
            for (std::size_t i = 0; i < roots.size(); ++i)
                for (std::size_t j = 0; j < roots.size(); ++j) {
                    if (i == j) continue;
                    const mpz_class d = tr.roots[i].value[0] - tr.roots[j].value[0];
                    const int v = std::min(N, d == 0 ? N : oracle::vp(d, p));
                    CHECK(dm[i][j] == Valuation::of(v));
                }
        }
    }
}

TEST_CASE("solution valuations") {
    SUBCASE("(x - y)(x + y) at (4, 1)") {
        const auto inst = inst_of({1, 0, -1}, 15);
        const auto prof = solution_valuations(4, 1, inst, 5);
        std::vector<std::string> v;
        for (const auto& r : prof.per_root) v.push_back(r.v.str());
        std::sort(v.begin(), v.end());
        CHECK(v == std::vector<std::string>{"0/1", "1/1"});
        CHECK(prof.t == Valuation::of(1));
    }
    SUBCASE("x (x - 5y)(x - 30y) at (25, 1), tracked") {
        const auto inst = inst_of({1, -35, 150, 0}, -2500);
        const auto tr = hensel_track_roots(inst.shape, 5, 10);
        const auto prof = solution_valuations(25, 1, inst, 5, &tr);
        CHECK(prof.t == Valuation::of(2));
        REQUIRE(prof.argmax_index);
        CHECK(tr.roots[*prof.argmax_index].value[0] == 0);
        CHECK_FALSE(prof.tie);
    }
    SUBCASE("non-coprime input") {
        const auto inst = inst_of({1, 0, -1}, 15);
        CHECK_THROWS_AS(solution_valuations(4, 2, inst, 5), InvalidInput);
    }
}

TEST_CASE("check_vb_zero") {
    const auto F = BinaryForm::from_coeffs(oracle::form_from_linear({{1, 1}, {1, 6}}));
    CHECK(F.eval(2, 1) == -4);
    CHECK(check_vb_zero(F, 2, 1, -4, 2));
    // p | b with a unit leading coefficient forces p not dividing F(a, b)
    for (int a = 1; a < 30; ++a)
        for (int b : {5, 10, 25})
            if (std::gcd(a, b) == 1) CHECK(F.eval(a, b) % 5 != 0);
}
