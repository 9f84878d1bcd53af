#include <catch2/catch_amalgamated.hpp>

#include "nilorbit/rng.hpp"
#include "nilorbit/subspace.hpp"
#include "test_util.hpp"

using namespace nilorbit;
using nilorbit::test::random_matrix;

namespace {

Subspace random_subspace(Rng& rng, std::size_t ambient) {
    const std::size_t vecs = rng.uniform(0, static_cast<int>(ambient));
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < vecs; ++i) rows.push_back(nilorbit::test::random_vec(rng, ambient));
    return Subspace::from_spanning(ambient, rows);
}

}  // namespace

TEST_CASE("annihilator of the full space and of zero") {
    CHECK(annihilator(Subspace::full(4)) == Subspace::zero(4));
    CHECK(annihilator(Subspace::zero(4)) == Subspace::full(4));
}

TEST_CASE("annihilator of a coordinate line") {
    const Subspace s = Subspace::from_spanning(3, {{Rational(1), Rational(0), Rational(0)}});
    const Subspace expected = Subspace::from_spanning(
        3, {{Rational(0), Rational(1), Rational(0)}, {Rational(0), Rational(0), Rational(1)}});
    CHECK(annihilator(s) == expected);
}

TEST_CASE("annihilator is an order-reversing involution") {
    Rng rng(23);
    for (int t = 0; t < 100; ++t) {
        const std::size_t ambient = 1 + rng.uniform(0, 5);
        const Subspace a = random_subspace(rng, ambient);
        const Subspace b = random_subspace(rng, ambient);
        CHECK(annihilator(annihilator(a)) == a);
        CHECK(a.dim() + annihilator(a).dim() == ambient);
        if (contains(a, b)) CHECK(contains(annihilator(b), annihilator(a)));
    }
}

TEST_CASE("lattice identities on the coordinate axes") {
    const Subspace e1 = Subspace::from_spanning(3, {{Rational(1), Rational(0), Rational(0)}});
    const Subspace e2 = Subspace::from_spanning(3, {{Rational(0), Rational(1), Rational(0)}});
    const Subspace plane = Subspace::from_spanning(
        3, {{Rational(1), Rational(0), Rational(0)}, {Rational(0), Rational(1), Rational(0)}});
    CHECK(sum(e1, e2) == plane);
    CHECK(intersect(e1, e2) == Subspace::zero(3));
    CHECK(sum(e1, Subspace::zero(3)) == e1);
    CHECK(intersect(e1, Subspace::full(3)) == e1);
}

TEST_CASE("dimension formula and containment characterization") {
    Rng rng(29);
    for (int t = 0; t < 100; ++t) {
        const std::size_t ambient = 1 + rng.uniform(0, 5);
        const Subspace a = random_subspace(rng, ambient);
        const Subspace b = random_subspace(rng, ambient);
        CHECK(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim());
        CHECK(contains(a, b) == equals(sum(a, b), a));
    }
}

TEST_CASE("mismatched ambient dimensions are rejected") {
    CHECK_THROWS_AS(sum(Subspace::full(3), Subspace::full(4)), DimensionMismatchError);
    CHECK_THROWS_AS(intersect(Subspace::zero(2), Subspace::zero(5)), DimensionMismatchError);
    CHECK_THROWS_AS(contains(Subspace::zero(2), Subspace::zero(3)), DimensionMismatchError);
}

TEST_CASE("subspace equality is structural on the canonical basis") {
    // the same plane presented by two different spanning sets
    const Subspace a = Subspace::from_spanning(
        3, {{Rational(1), Rational(1), Rational(0)}, {Rational(0), Rational(2), Rational(0)}});
    const Subspace b = Subspace::from_spanning(
        3, {{Rational(3), Rational(-1), Rational(0)}, {Rational(1), Rational(0), Rational(0)}});
    CHECK(a == b);
}
