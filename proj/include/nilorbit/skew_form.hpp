#pragma once

#include <cstddef>
#include <vector>

#include "nilorbit/error.hpp"
#include "nilorbit/lie_algebra.hpp"
#include "nilorbit/matrix.hpp"
#include "nilorbit/polynomial.hpp"

namespace nilorbit {

/// Kirillov form at xi: B(i,j) = <xi, [X_i, X_j]>, an n x n skew matrix.
inline RatMatrix kirillov_matrix(const LieAlgebra& L, const Covector& xi) {
    if (xi.size() != L.dim())
        throw DimensionMismatchError("kirillov form: covector length mismatch");
    const std::size_t n = L.dim();
    RatMatrix b(n, n);
    for (const auto& [i, j] : L.nonzero_pairs()) {
        Rational v(0);
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& c = L.c(i, j, k);
            if (c != 0) v += c * xi[k];
        }
        b(i, j) = v;
        b(j, i) = -v;
    }
    return b;
}

/// The same form with xi left symbolic: entry (i,j) is the linear polynomial
/// xi -> <xi, [X_i, X_j]> in the dual coordinates xi_1..xi_n.
inline Matrix<MultiPoly> symbolic_skew_form(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    Matrix<MultiPoly> b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = MultiPoly::constant(Rational(0), n);
    for (const auto& [i, j] : L.nonzero_pairs()) {
        std::vector<std::pair<Monomial, Rational>> terms;
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& c = L.c(i, j, k);
            if (c == 0) continue;
            Monomial m(n, 0);
            m[k] = 1;
            terms.emplace_back(std::move(m), c);
        }
        b(i, j) = MultiPoly::from_terms(n, terms);
        b(j, i) = -b(i, j);
    }
    return b;
}

/// Pfaffians of all principal submatrices of the given even order, listed by
/// lexicographically increasing index subset.
template <typename T>
std::vector<T> sub_pfaffians(const Matrix<T>& form, std::size_t order) {
    if (order % 2 != 0) throw InvalidInputError("sub-Pfaffians: order must be even");
    if (!form.is_square() || order > form.rows())
        throw InvalidInputError("sub-Pfaffians: order exceeds matrix size");
    std::vector<T> out;
    std::vector<std::size_t> subset(order);
    for (std::size_t i = 0; i < order; ++i) subset[i] = i;
    const std::size_t n = form.rows();
    if (order == 0) {
        out.push_back(T(1));
        return out;
    }
    while (true) {
        out.push_back(sub_pfaffian(form, subset));
        // next lexicographic subset
        std::size_t i = order;
        while (i-- > 0) {
            if (subset[i] + 1 <= n - (order - i)) {
                ++subset[i];
                for (std::size_t j = i + 1; j < order; ++j) subset[j] = subset[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

/// Largest even r such that some order-r sub-Pfaffian is a nonzero
/// polynomial; this is the rank of the form at generic xi, and an upper
/// bound for the rank at every xi.
inline std::size_t generic_skew_rank(const Matrix<MultiPoly>& form) {
    std::size_t rank = 0;
    for (std::size_t order = 2; order <= form.rows(); order += 2) {
        bool any = false;
        for (const MultiPoly& p : sub_pfaffians(form, order))
            if (!p.is_zero()) {
                any = true;
                break;
            }
        if (!any) break;  // all higher orders vanish identically as well
        rank = order;
    }
    return rank;
}

}  // namespace nilorbit
