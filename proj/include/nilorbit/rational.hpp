#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "nilorbit/error.hpp"

namespace nilorbit {

/// Arbitrary-precision integer with plain value semantics.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

/// Exact rational scalar. Always stored reduced with positive denominator;
/// the backend renormalizes after every operation, so equality is structural.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Element of the algebra or of its dual, as coordinates in a fixed basis.
using Vec = std::vector<Rational>;

/// A point of g*, written in the basis dual to X_1..X_n.
using Covector = Vec;

inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw InvalidInputError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("dot: length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace nilorbit
