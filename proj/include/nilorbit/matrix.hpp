#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nilorbit/error.hpp"
#include "nilorbit/rational.hpp"

namespace nilorbit {

/// Dense row-major matrix over an exact scalar ring.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw InvalidInputError("matrix: entry count does not match shape");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw InvalidInputError("matrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    void set_row(std::size_t i, const std::vector<T>& v) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_skew_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                if ((*this)(i, j) != -(*this)(j, i)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatchError("matrix product: shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw DimensionMismatchError("matrix apply: length mismatch");
        std::vector<T> out(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != T(0)) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Int>;

struct RrefResult {
    RatMatrix mat;
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

/// Unique reduced row-echelon form: leading 1 in every pivot column, zeros
/// above and below, zero rows last. Rank equals pivots.size().
inline RrefResult rref(RatMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(row, p);
        const Rational inv = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

/// Rank by fraction-free (Bareiss) elimination on the numerator matrix after
/// clearing each row's denominators. Keeps intermediate integers to minor
/// size, which matters on the sampling hot path.
inline std::size_t rank(const RatMatrix& m) {
    IntMatrix a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m(i, j)));
        for (std::size_t j = 0; j < m.cols(); ++j)
            a(i, j) = numerator(m(i, j)) * (l / denominator(m(i, j)));
    }
    Int prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(row, p);
        for (std::size_t i = row + 1; i < a.rows(); ++i) {
            for (std::size_t j = col + 1; j < a.cols(); ++j)
                a(i, j) = (a(i, j) * a(row, col) - a(i, col) * a(row, j)) / prev;
            a(i, col) = 0;
        }
        prev = a(row, col);
        ++row;
    }
    return row;
}

/// Basis of the right null space {v : m v = 0}, one vector per row,
/// canonicalized to reduced row-echelon form.
inline RatMatrix kernel_basis(const RatMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<Vec> rows;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat(i, f);
        rows.push_back(std::move(v));
    }
    RatMatrix k(rows.size(), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) k.set_row(i, rows[i]);
    return rref(std::move(k)).mat;
}

/// Determinant by rational Gaussian elimination (pivot product with swap
/// signs). Kept separate from the Pfaffian expansion so the two can check
/// each other.
inline Rational determinant(RatMatrix m) {
    if (!m.is_square()) throw InvalidInputError("determinant: matrix not square");
    Rational det(1);
    for (std::size_t col = 0; col < m.cols(); ++col) {
        std::size_t p = col;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) return Rational(0);
        if (p != col) {
            m.swap_rows(col, p);
            det = -det;
        }
        det *= m(col, col);
        const Rational inv = Rational(1) / m(col, col);
        for (std::size_t i = col + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            const Rational f = m(i, col) * inv;
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (!m.is_square()) throw InvalidInputError("inverse: matrix not square");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult r = rref(std::move(aug));
    if (r.pivots.size() != n || r.pivots.back() != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.mat(i, n + j);
    return inv;
}

namespace detail {

template <typename T>
T pfaffian_expand(const Matrix<T>& a, const std::vector<std::size_t>& idx) {
    const std::size_t m = idx.size();
    if (m == 0) return T(1);
    if (m == 2) return a(idx[0], idx[1]);
    T sum(0);
    for (std::size_t pos = 1; pos < m; ++pos) {
        const T& entry = a(idx[0], idx[pos]);
        if (entry == T(0)) continue;
        std::vector<std::size_t> rest;
        rest.reserve(m - 2);
        for (std::size_t q = 1; q < m; ++q)
            if (q != pos) rest.push_back(idx[q]);
        T term = entry * pfaffian_expand(a, rest);
        if (pos % 2 == 1)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

}  // namespace detail

/// Pfaffian of an even-order skew-symmetric matrix, by Laplace-style
/// expansion along the lowest index; Pf [[0,a],[-a,0]] = a.
template <typename T>
T pfaffian(const Matrix<T>& m) {
    if (!m.is_square() || m.rows() % 2 != 0)
        throw InvalidInputError("pfaffian: matrix must be square of even order");
    if (!m.is_skew_symmetric()) throw InvalidInputError("pfaffian: matrix not skew-symmetric");
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return detail::pfaffian_expand(m, idx);
}

/// Pfaffian of the principal submatrix on the given (strictly increasing)
/// index subset; preconditions checked by the caller.
template <typename T>
T sub_pfaffian(const Matrix<T>& m, const std::vector<std::size_t>& subset) {
    return detail::pfaffian_expand(m, subset);
}

inline std::string to_string(const RatMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "[") << m(i, j).str();
        os << "]" << (i + 1 == m.rows() ? "]" : "\n");
    }
    return os.str();
}

}  // namespace nilorbit
