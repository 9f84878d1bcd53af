#include <catch2/catch_amalgamated.hpp>

#include "nilorbit/catalog.hpp"
#include "nilorbit/lie_algebra.hpp"
#include "nilorbit/rng.hpp"
#include "test_util.hpp"

using namespace nilorbit;

namespace {

Vec unit(std::size_t n, std::size_t i) {
    Vec v(n, Rational(0));
    v[i] = 1;
    return v;
}

/// Independent Jacobi oracle: expands the cyclic sum through the bracket.
Vec jacobi_residual(const LieAlgebra& L, const Vec& x, const Vec& y, const Vec& z) {
    Vec r = L.bracket(L.bracket(x, y), z);
    const Vec s = L.bracket(L.bracket(y, z), x);
    const Vec t = L.bracket(L.bracket(z, x), y);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += s[i] + t[i];
    return r;
}

}  // namespace

TEST_CASE("bracket tables of n3 and f5") {
    const LieAlgebra n3 = catalog_make("n3");
    CHECK(n3.bracket(unit(3, 2), unit(3, 1)) == unit(3, 0));  // [X3, X2] = X1
    const LieAlgebra f5 = catalog_make("f_5");
    CHECK(f5.bracket(unit(5, 4), unit(5, 2)) == unit(5, 1));  // [X5, X3] = X2
}

TEST_CASE("bracket of a vector with itself vanishes") {
    Rng rng(43);
    const LieAlgebra L = catalog_make("n5_4");
    for (int t = 0; t < 50; ++t) {
        const Vec x = nilorbit::test::random_vec(rng, 5);
        CHECK(is_zero_vec(L.bracket(x, x)));
    }
}

TEST_CASE("every catalog entry validates") {
    for (const CatalogEntry& e : catalog_list()) {
        const LieAlgebra L = catalog_make(e.key);
        CHECK(L.validate().ok());
        CHECK(L.dim() == e.dim);
    }
}

TEST_CASE("so(3)-style constants are rejected as non-nilpotent") {
    // [X2,X1]=X3, [X3,X2]=X1, [X1,X3]=X2: a Lie algebra, but not nilpotent
    const LieAlgebra so3 = LieAlgebra::raw_from_brackets(
        3, {{2, 1, {{3, Rational(1)}}},
            {3, 2, {{1, Rational(1)}}},
            {3, 1, {{2, Rational(-1)}}}});
    CHECK(so3.validate().kind == ValidationResult::Kind::NotNilpotent);
}

TEST_CASE("a broken bracket table reports its first Jacobi triple") {
    // n5_4 with [X4,X3] redirected to X4 breaks Jacobi on (3,4,5)
    const LieAlgebra broken = LieAlgebra::raw_from_brackets(
        5, {{5, 4, {{3, Rational(1)}}},
            {5, 3, {{2, Rational(1)}}},
            {4, 3, {{4, Rational(1)}}}});
    const ValidationResult v = broken.validate();
    CHECK(v.kind == ValidationResult::Kind::JacobiViolation);
    CHECK(v.i == 3);
    CHECK(v.j == 4);
    CHECK(v.k == 5);
}

TEST_CASE("antisymmetry violations in raw tensors are caught") {
    std::vector<Rational> c(8, Rational(0));
    c[(0 * 2 + 1) * 2 + 0] = 1;  // c(1,2 -> 1) set without the mirrored entry
    const LieAlgebra bad = LieAlgebra::raw(2, c);
    CHECK(bad.validate().kind == ValidationResult::Kind::AntisymmetryViolation);
}

TEST_CASE("lower central series dimensions") {
    CHECK(catalog_make("a4").lcs_dims() == std::vector<std::size_t>{4, 0});
    CHECK(catalog_make("n5_5").lcs_dims() == std::vector<std::size_t>{5, 3, 2, 1, 0});
    CHECK(catalog_make("n6_15").lcs_dims() == std::vector<std::size_t>{6, 3, 0});
    CHECK(catalog_make("n6_15").is_two_step());
    CHECK_FALSE(catalog_make("n6_18").is_two_step());
}

TEST_CASE("centers of the small catalog algebras") {
    CHECK(catalog_make("a3").center() == Subspace::full(3));
    const LieAlgebra n3 = catalog_make("n3");
    CHECK(n3.center() == Subspace::from_spanning(3, {unit(3, 0)}));
    const LieAlgebra n54 = catalog_make("n5_4");
    CHECK(n54.center() == Subspace::from_spanning(5, {unit(5, 0), unit(5, 1)}));
}

TEST_CASE("ideal tests") {
    const LieAlgebra n3 = catalog_make("n3");
    CHECK(n3.is_ideal(Subspace::zero(3)));
    CHECK(n3.is_ideal(Subspace::full(3)));
    CHECK_FALSE(n3.is_ideal(Subspace::from_spanning(3, {unit(3, 1)})));
    for (const char* key : {"n3", "n5_4", "n6_18", "f_6"}) {
        const LieAlgebra L = catalog_make(key);
        CHECK(L.is_ideal(L.derived_subalgebra()));
        CHECK(L.is_ideal(L.center()));
    }
}

TEST_CASE("jacobi residual vanishes on random triples") {
    Rng rng(47);
    for (const char* key : {"n5_6", "n6_15", "f_7", "h_3_2"}) {
        const LieAlgebra L = catalog_make(key);
        for (int t = 0; t < 100; ++t) {
            const Vec x = nilorbit::test::random_vec(rng, L.dim());
            const Vec y = nilorbit::test::random_vec(rng, L.dim());
            const Vec z = nilorbit::test::random_vec(rng, L.dim());
            CHECK(is_zero_vec(jacobi_residual(L, x, y, z)));
        }
    }
}

TEST_CASE("direct products bracket componentwise") {
    const LieAlgebra p = direct_product(catalog_make("a1"), catalog_make("n3"));
    const LieAlgebra q = catalog_make("a1 × n3");
    CHECK(p.dim() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) CHECK(p.c(i, j, k) == q.c(i, j, k));
}

TEST_CASE("center dimension adds over direct products") {
    Rng rng(53);
    const char* keys[] = {"n3", "n4", "n5_2", "f_6"};
    for (const char* a : keys)
        for (const char* b : keys) {
            const LieAlgebra la = catalog_make(a), lb = catalog_make(b);
            CHECK(direct_product(la, lb).center().dim() ==
                  la.center().dim() + lb.center().dim());
        }
}

TEST_CASE("semidirect products by a square-zero map are 2-step") {
    RatMatrix d(4, 4);
    d(0, 2) = 1;
    d(1, 3) = 1;  // D != 0, D^2 = 0
    const LieAlgebra g = semidirect_nilpotent(d);
    CHECK(g.dim() == 5);
    CHECK(g.nilpotency_step() == 2);
}

TEST_CASE("semidirect products reject non-nilpotent maps") {
    CHECK_THROWS_AS(semidirect_nilpotent(RatMatrix::identity(3)), InvalidInputError);
}

TEST_CASE("series and center dimensions are basis invariants") {
    Rng rng(59);
    for (const CatalogEntry& e : catalog_list()) {
        const LieAlgebra L = catalog_make(e.key);
        const auto dims = L.lcs_dims();
        const auto center_dim = L.center().dim();
        for (int t = 0; t < 10; ++t) {
            const LieAlgebra M = change_of_basis(L, nilorbit::test::random_unimodular(rng, L.dim()));
            CHECK(M.lcs_dims() == dims);
            CHECK(M.center().dim() == center_dim);
        }
    }
}
