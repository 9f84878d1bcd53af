#include <catch2/catch_amalgamated.hpp>

#include "nilorbit/polynomial.hpp"
#include "nilorbit/rng.hpp"
#include "test_util.hpp"

using namespace nilorbit;

namespace {

MultiPoly var(std::size_t i, std::size_t n) { return MultiPoly::variable(i, n); }

/// Random polynomial of total degree <= 2, returned with the raw term list
/// used to build it (the evaluation oracle sums that list directly).
std::pair<MultiPoly, std::vector<std::pair<Monomial, Rational>>> random_quadratic(Rng& rng,
                                                                                  std::size_t n) {
    std::vector<std::pair<Monomial, Rational>> terms;
    const int count = 1 + rng.uniform(0, 5);
    for (int t = 0; t < count; ++t) {
        Monomial m(n, 0);
        for (int d = rng.uniform(0, 2); d > 0; --d)
            ++m[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 1))];
        terms.emplace_back(std::move(m), nilorbit::test::random_rational(rng, -9, 9, 3));
    }
    return {MultiPoly::from_terms(n, terms), terms};
}

}  // namespace

TEST_CASE("difference of squares") {
    const MultiPoly x1 = var(0, 2), x2 = var(1, 2);
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
}

TEST_CASE("evaluation of a univariate square") {
    const MultiPoly p = var(0, 1) * var(0, 1);
    CHECK(p.evaluate({Rational(3)}) == 9);
}

TEST_CASE("evaluation agrees with direct term summation") {
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng.uniform(0, 3);
        const auto [p, terms] = random_quadratic(rng, n);
        const Covector point = nilorbit::test::random_vec(rng, n, -5, 5, 3);
        Rational expected(0);
        for (const auto& [m, c] : terms) {
            Rational prod = c;
            for (std::size_t i = 0; i < n; ++i)
                for (unsigned e = 0; e < m[i]; ++e) prod *= point[i];
            expected += prod;
        }
        CHECK(p.evaluate(point) == expected);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Rng rng(37);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng.uniform(0, 2);
        const auto [a, ta] = random_quadratic(rng, n);
        const auto [b, tb] = random_quadratic(rng, n);
        const Covector point = nilorbit::test::random_vec(rng, n, -4, 4);
        CHECK((a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point));
        CHECK((a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point));
    }
}

TEST_CASE("ring identities") {
    Rng rng(41);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng.uniform(0, 2);
        const auto [a, ta] = random_quadratic(rng, n);
        const auto [b, tb] = random_quadratic(rng, n);
        const auto [c, tc] = random_quadratic(rng, n);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a - a == MultiPoly::constant(Rational(0), n));
    }
}

TEST_CASE("variable-count mismatch is rejected") {
    CHECK_THROWS_AS(var(0, 2) + var(0, 3), DimensionMismatchError);
    CHECK_THROWS_AS(var(0, 2) * var(0, 3), DimensionMismatchError);
    CHECK_THROWS_AS(var(0, 2).evaluate({Rational(1)}), DimensionMismatchError);
}

TEST_CASE("constants promote into any ring") {
    const MultiPoly x = var(0, 3);
    CHECK(x + MultiPoly(0) == x);
    CHECK(x * MultiPoly(1) == x);
    CHECK(MultiPoly(2) * MultiPoly(3) == MultiPoly(6));
    CHECK(MultiPoly(0) == MultiPoly::constant(Rational(0), 5));
}

TEST_CASE("grevlex order on degree-2 monomials in three variables") {
    // with x1 > x2 > x3: x1^2 > x1 x2 > x2^2 > x1 x3 > x2 x3 > x3^2
    const GrevlexLess less;
    const Monomial x1x1{2, 0, 0}, x1x2{1, 1, 0}, x2x2{0, 2, 0}, x1x3{1, 0, 1}, x2x3{0, 1, 1},
        x3x3{0, 0, 2};
    CHECK(less(x1x2, x1x1));
    CHECK(less(x2x2, x1x2));
    CHECK(less(x1x3, x2x2));
    CHECK(less(x2x3, x1x3));
    CHECK(less(x3x3, x2x3));
    CHECK(less(x3x3, x1x1));
    CHECK_FALSE(less(x1x1, x1x1));
}

TEST_CASE("leading term respects total degree first") {
    const MultiPoly p = var(0, 2) * var(0, 2) + var(1, 2);
    CHECK(p.leading_term().first == Monomial{2, 0});
    CHECK(p.degree() == 2);
}
