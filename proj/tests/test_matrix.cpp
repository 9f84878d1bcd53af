#include <catch2/catch_amalgamated.hpp>

#include "nilorbit/matrix.hpp"
#include "nilorbit/rng.hpp"
#include "nilorbit/subspace.hpp"
#include "test_util.hpp"

using namespace nilorbit;
using nilorbit::test::random_matrix;
using nilorbit::test::random_skew;

TEST_CASE("rref of the identity is the identity") {
    const RatMatrix id = RatMatrix::identity(3);
    const RrefResult r = rref(id);
    CHECK(r.mat == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rref of the zero matrix has no pivots") {
    const RatMatrix z(2, 4);
    const RrefResult r = rref(z);
    CHECK(r.mat == z);
    CHECK(r.pivots.empty());
}

TEST_CASE("rref reduces a rank-one 2x2 matrix") {
    const RatMatrix m{{Rational(2), Rational(4)}, {Rational(1), Rational(2)}};
    const RrefResult r = rref(m);
    const RatMatrix expected{{Rational(1), Rational(2)}, {Rational(0), Rational(0)}};
    CHECK(r.mat == expected);
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent and agrees with the Bareiss rank") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        const std::size_t rows = 1 + rng.uniform(0, 5);
        const std::size_t cols = 1 + rng.uniform(0, 5);
        const RatMatrix m = random_matrix(rng, rows, cols, -9, 9, 4);
        const RrefResult r = rref(m);
        CHECK(rref(r.mat).mat == r.mat);
        CHECK(r.pivots.size() == rank(m));
    }
}

TEST_CASE("kernel of the zero matrix is the full space") {
    const Subspace k = kernel(RatMatrix(4, 4));
    CHECK(k.dim() == 4);
    CHECK(k == Subspace::full(4));
}

TEST_CASE("kernel of the identity is trivial") {
    CHECK(kernel(RatMatrix::identity(5)).dim() == 0);
}

TEST_CASE("kernel of a single equation") {
    const RatMatrix m{{Rational(1), Rational(1), Rational(0)}};
    const Subspace k = kernel(m);
    REQUIRE(k.dim() == 2);
    CHECK(k.contains_vector({Rational(1), Rational(-1), Rational(0)}));
    CHECK(k.contains_vector({Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("kernel dimension plus rank equals the column count") {
    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        const std::size_t rows = 1 + rng.uniform(0, 5);
        const std::size_t cols = 1 + rng.uniform(0, 5);
        const RatMatrix m = random_matrix(rng, rows, cols);
        const Subspace k = kernel(m);
        CHECK(k.dim() + rank(m) == cols);
        for (std::size_t r = 0; r < k.dim(); ++r)
            CHECK(is_zero_vec(m.apply(k.basis_vector(r))));
    }
}

TEST_CASE("pfaffian of the 2x2 base case") {
    const Rational a(3, 7);
    const RatMatrix m{{Rational(0), a}, {-a, Rational(0)}};
    CHECK(pfaffian(m) == a);
}

TEST_CASE("pfaffian of the zero matrix vanishes") {
    CHECK(pfaffian(RatMatrix(4, 4)) == 0);
}

TEST_CASE("pfaffian rejects odd order and non-skew input") {
    CHECK_THROWS_AS(pfaffian(RatMatrix(3, 3)), InvalidInputError);
    CHECK_THROWS_AS(pfaffian(RatMatrix::identity(4)), InvalidInputError);
}

TEST_CASE("pfaffian squared equals the determinant") {
    Rng rng(13);
    for (std::size_t n : {2, 4, 6, 8}) {
        for (int t = 0; t < 50; ++t) {
            const RatMatrix m = random_skew(rng, n);
            const Rational pf = pfaffian(m);
            CHECK(pf * pf == determinant(m));
        }
    }
}

TEST_CASE("determinant of odd-order skew matrices vanishes") {
    Rng rng(17);
    for (int t = 0; t < 20; ++t) CHECK(determinant(random_skew(rng, 5)) == 0);
}

TEST_CASE("inverse round-trips against multiplication") {
    Rng rng(19);
    for (int t = 0; t < 50; ++t) {
        const RatMatrix p = nilorbit::test::random_unimodular(rng, 4);
        const auto inv = inverse(p);
        REQUIRE(inv.has_value());
        CHECK(p * *inv == RatMatrix::identity(4));
    }
    CHECK_FALSE(inverse(RatMatrix(3, 3)).has_value());
}
