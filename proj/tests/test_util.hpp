#pragma once

#include <cstdint>
#include <vector>

#include "nilorbit/matrix.hpp"
#include "nilorbit/rational.hpp"
#include "nilorbit/rng.hpp"

namespace nilorbit::test {

inline Rational random_rational(Rng& rng, int lo, int hi, int max_den = 1) {
    const Int num(rng.uniform(lo, hi));
    const Int den(max_den > 1 ? rng.uniform(1, max_den) : 1);
    return make_rational(num, den);
}

inline Vec random_vec(Rng& rng, std::size_t n, int lo = -9, int hi = 9, int max_den = 1) {
    Vec v(n);
    for (auto& x : v) x = random_rational(rng, lo, hi, max_den);
    return v;
}

inline RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo = -9,
                               int hi = 9, int max_den = 1) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng, lo, hi, max_den);
    return m;
}

inline RatMatrix random_skew(Rng& rng, std::size_t n, int lo = -9, int hi = 9) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = random_rational(rng, lo, hi);
            m(j, i) = -m(i, j);
        }
    return m;
}

/// Random unimodular matrix, built from row operations on the identity; the
/// determinant stays 1, so it is always a valid change of basis.
inline RatMatrix random_unimodular(Rng& rng, std::size_t n) {
    RatMatrix p = RatMatrix::identity(n);
    const std::size_t ops = 2 * n + 2;
    for (std::size_t t = 0; t < ops; ++t) {
        const std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 2));
        if (j >= i) ++j;
        Rational c(rng.uniform(-2, 2));
        if (c == 0) c = 1;
        for (std::size_t col = 0; col < n; ++col) p(i, col) += c * p(j, col);
    }
    return p;
}

}  // namespace nilorbit::test
