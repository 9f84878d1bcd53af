#include <catch2/catch_amalgamated.hpp>

#include "nilorbit/catalog.hpp"
#include "nilorbit/groebner.hpp"
#include "nilorbit/skew_form.hpp"

using namespace nilorbit;

namespace {

MultiPoly var(std::size_t i, std::size_t n) { return MultiPoly::variable(i, n); }

}  // namespace

TEST_CASE("normal form against a single divisor") {
    const MultiPoly x = var(0, 1);
    CHECK(normal_form(x * x + x, {x}).is_zero());
    CHECK(normal_form(x * x + MultiPoly(1), {x}) == MultiPoly(1));
}

TEST_CASE("buchberger on a principal ideal is immediate") {
    const GroebnerResult r = buchberger({var(0, 2) * var(0, 2)}, 100);
    CHECK(r.complete);
    CHECK_FALSE(r.contains_unit);
    CHECK(r.basis.size() == 1);
}

TEST_CASE("buchberger closes the circle-line pair") {
    // x^2 + y^2 - 1 and x - y: the S-pair reduces to a new univariate element
    const MultiPoly x = var(0, 2), y = var(1, 2);
    const GroebnerResult r =
        buchberger({x * x + y * y - MultiPoly(1), x - y}, 1000);
    CHECK(r.complete);
    CHECK(r.basis.size() >= 3);
    // 2 y^2 - 1 must reduce to zero against the completed basis
    const MultiPoly probe = MultiPoly(2) * y * y - MultiPoly(1);
    CHECK(normal_form(probe, r.basis).is_zero());
}

TEST_CASE("radical membership: xi1 lies in the radical of (xi1^2)") {
    const PolyIdeal ideal(1, {var(0, 1) * var(0, 1)});
    CHECK(radical_membership(ideal, var(0, 1)) == Membership::Member);
}

TEST_CASE("radical membership: xi2 does not vanish on V(xi1)") {
    const PolyIdeal ideal(2, {var(0, 2)});
    CHECK(radical_membership(ideal, var(1, 2)) == Membership::NotMember);
}

TEST_CASE("radical membership through the order-4 sub-Pfaffians of n5_1") {
    const LieAlgebra h5 = catalog_make("n5_1");
    const PolyIdeal ideal(5, sub_pfaffians(symbolic_skew_form(h5), 4));
    CHECK(radical_membership(ideal, var(0, 5)) == Membership::Member);
    // a coordinate outside [g,g] is not forced to vanish on the locus
    CHECK(radical_membership(ideal, var(3, 5)) == Membership::NotMember);
}

TEST_CASE("the zero polynomial is a member, nonmembers need a nonzero ideal") {
    const PolyIdeal zero_ideal(2, {});
    CHECK(radical_membership(zero_ideal, MultiPoly(0)) == Membership::Member);
    CHECK(radical_membership(zero_ideal, var(0, 2)) == Membership::NotMember);
}

TEST_CASE("an exhausted effort cap yields Unknown, never a wrong verdict") {
    const PolyIdeal ideal(1, {var(0, 1) * var(0, 1)});
    CHECK(radical_membership(ideal, var(0, 1), 0) == Membership::Unknown);
}

TEST_CASE("membership verdicts respect sampled common zeros") {
    // V(xi1 * xi2, xi1 * xi3) contains the plane xi1 = 0, where xi2 does not vanish
    const std::size_t n = 3;
    const MultiPoly g1 = var(0, n) * var(1, n);
    const MultiPoly g2 = var(0, n) * var(2, n);
    const PolyIdeal ideal(n, {g1, g2});
    CHECK(radical_membership(ideal, var(0, n)) == Membership::NotMember);
    // xi1 itself multiplied by anything vanishing there stays in the radical
    CHECK(radical_membership(ideal, g1 * g2) == Membership::Member);
}
