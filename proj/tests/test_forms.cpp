#include "oracles.hpp"

#include "thue/errors.hpp"
#include "thue/forms.hpp"
#include "thue/poly.hpp"

#include <doctest.h>

#include <random>

using namespace thue;

namespace {

BinaryForm form(std::vector<mpz_class> c) { return BinaryForm::from_coeffs(std::move(c)); }

}  // namespace

TEST_CASE("resultant and discriminant on small polynomials") {
    // disc(x^2 + bx + c) = b^2 - 4c
    CHECK(discriminant(IntPoly{3, 5, 1}) == 25 - 12);
    CHECK(discriminant(IntPoly{1, 0, 0, 0, 1}) == 256);
    // Res(x - a, g) = g(a)
    CHECK(resultant(IntPoly{-3, 1}, IntPoly{1, 2, 1}) == 16);
}

TEST_CASE("squarefree decomposition recovers multiplicities") {
    // (x - 1)^2 (x + 1)
    const IntPoly f = mul(pow(IntPoly{-1, 1}, 2), IntPoly{1, 1});
    const auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 2);
    int total = 0;
    for (const auto& p : parts) total += degree(p.factor) * p.multiplicity;
    CHECK(total == 3);
}

TEST_CASE("interpolation is exact") {
    std::vector<mpz_class> xs{0, 1, 2, 3};
    std::vector<mpq_class> ys;
    for (const auto& x : xs) ys.push_back(mpq_class(x * x * x - 2 * x + 7));
    const RatPoly f = interpolate(xs, ys);
    REQUIRE(f.size() == 4);
    CHECK(f[0] == 7);
    CHECK(f[1] == -2);
    CHECK(f[2] == 0);
    CHECK(f[3] == 1);
}

TEST_CASE("factor_shape") {
    SUBCASE("x^4 + y^4") {
        const auto s = factor_shape(form({1, 0, 0, 0, 1}));
        CHECK(s.s == 4);
        CHECK(s.multiplicities == std::vector<int>{1, 1, 1, 1});
        CHECK(s.c == 1);
        CHECK(s.degree_deficit == 0);
    }
    SUBCASE("(x - y)^2 (x + y)") {
        const auto c = oracle::form_from_linear({{1, 1}, {1, 1}, {1, -1}});
        const auto s = factor_shape(form(c));
        CHECK(s.s == 2);
        auto m = s.multiplicities;
        std::sort(m.begin(), m.end());
        CHECK(m == std::vector<int>{1, 2});
    }
    SUBCASE("x y has its second root at infinity") {
        const auto s = factor_shape(form({0, 1, 0}));
        CHECK(s.s == 1);
        CHECK(s.degree_deficit == 1);
        CHECK(projective_root_count(s) == 2);
    }
    CHECK_THROWS_AS(factor_shape(form({0, 0, 0})), InvalidInput);
}

TEST_CASE("genus examples") {
    CHECK(genus(factor_shape(form({1, 0, 0, 0, 1})), 4) == 3);
    // y^6 = sextic with six distinct roots
    CHECK(genus(factor_shape(form({1, 0, 0, 0, 0, 0, -2})), 6) == 10);
    // n = 5 with multiplicities (1, 1, 3)
    const auto c = oracle::form_from_linear({{1, 0}, {1, 1}, {1, 2}, {1, 2}, {1, 2}});
    CHECK(genus(factor_shape(form(c)), 5) == 2);
}

TEST_CASE("dstar examples") {
    CHECK(dstar(factor_shape(form({1, 0, -1}))) == -4);
    CHECK(dstar(factor_shape(form({1, 0, -1, 0}))) == -4);
    CHECK(dstar(factor_shape(form({1, 0, 1}))) == 4);
}

TEST_CASE("dstar agrees with the root product on random split forms") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> q(1, 4), r(-9, 9), deg(2, 6);
    for (int it = 0; it < 60; ++it) {
        std::vector<oracle::Pair> fac;
        const int n = deg(rng);
        while (static_cast<int>(fac.size()) < n) {
            mpz_class qq = q(rng), rr = r(rng);
            if (gcd(qq, rr) != 1) continue;
            bool dup = false;
            for (const auto& [a, b] : fac) dup = dup || a * rr == b * qq;
            if (!dup) fac.emplace_back(qq, rr);
        }
        const auto c = oracle::form_from_linear(fac);
        const auto shape = factor_shape(form(c));
        CHECK(dstar(shape) == oracle::dstar_from_roots(fac));
    }
}

TEST_CASE("dstar agrees with complex roots") {
    // x^4 + 3x^3 - x + 5 is squarefree with no rational roots.
    const std::vector<mpz_class> c{1, 3, 0, -1, 5};
    const auto shape = factor_shape(form(c));
    const auto z = oracle::complex_roots({5, -1, 0, 3, 1});
    std::complex<long double> prod = 1;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = 0; j < z.size(); ++j)
            if (i != j) prod *= z[i] - z[j];
    const long double expect = dstar(shape).get_d();
    CHECK(std::abs(prod.real() - expect) < 1e-6L * std::abs(expect));
    CHECK(std::abs(prod.imag()) < 1e-6L * std::abs(expect));
}

TEST_CASE("irreducibility of the model") {
    CHECK(is_irreducible_model(factor_shape(form({1, 0, 0, 0, 1})), 4, 17));
    const auto sq = factor_shape(form({1, 0, -2, 0, 1}));  // (x^2 - y^2)^2
    CHECK_FALSE(is_irreducible_model(sq, 4, 1));
    const auto c = oracle::form_from_linear({{1, 0}, {1, 0}, {1, 0}, {1, 1}, {1, 1}, {1, 2}});
    CHECK(is_irreducible_model(factor_shape(form(c)), 6, 1));
    CHECK_THROWS_AS(is_irreducible_model(sq, 4, 0), InvalidInput);
}

TEST_CASE("monicize") {
    SUBCASE("already a unit") {
        const auto m = monicize(form({1, 0, 0, 0, 1}), 5);
        CHECK(m.u == 0);
        CHECK(m.F.coeffs == form({1, 0, 0, 0, 1}).coeffs);
    }
    SUBCASE("y (x - y)") {
        const auto F = form({0, 1, -1});
        const auto m = monicize(F, 5);
        CHECK(m.F.coeffs[0] % 5 != 0);
        // F'(x, y) = F(x, y + u x)
        for (int x = -3; x <= 3; ++x)
            for (int y = -3; y <= 3; ++y) CHECK(m.F.eval(x, y) == F.eval(x, y + m.u * x));
    }
    SUBCASE("x y") {
        const auto m = monicize(form({0, 1, 0}), 5);
        CHECK(m.u >= 1);
        CHECK(m.F.coeffs[0] == m.u);
    }
}

TEST_CASE("make_instance normalizes content") {
    const auto inst = make_instance(form({2, 0, 0, 0, 2}), 34);
    CHECK(inst.h == 17);
    CHECK(inst.content_divisor == 2);
    CHECK(inst.g == 3);
    CHECK_THROWS_AS(make_instance(form({2, 0, 0, 0, 2}), 17), InvalidInput);
    CHECK_THROWS_AS(make_instance(form({1, 0, 1}), 0), InvalidInput);
}
