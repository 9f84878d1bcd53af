#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nilorbit/error.hpp"
#include "nilorbit/matrix.hpp"
#include "nilorbit/rational.hpp"
#include "nilorbit/subspace.hpp"

namespace nilorbit {

/// One summand of a bracket table entry, with the paper's 1-based basis index.
struct BracketTerm {
    std::size_t k;
    Rational coeff;
};

/// A table line [X_i, X_j] = sum of terms, with i > j (lower-triangular
/// convention; antisymmetry fills in the rest).
struct BracketLine {
    std::size_t i;
    std::size_t j;
    std::vector<BracketTerm> terms;
};

struct ValidationResult {
    enum class Kind { Ok, AntisymmetryViolation, JacobiViolation, NotNilpotent };
    Kind kind = Kind::Ok;
    // First offending basis triple in lexicographic order, 1-based.
    std::size_t i = 0, j = 0, k = 0;

    bool ok() const { return kind == Kind::Ok; }

    std::string message() const {
        switch (kind) {
            case Kind::Ok:
                return "Ok";
            case Kind::AntisymmetryViolation:
                return "antisymmetry violated at (" + std::to_string(i) + "," +
                       std::to_string(j) + "," + std::to_string(k) + ")";
            case Kind::JacobiViolation:
                return "Jacobi identity violated on (" + std::to_string(i) + "," +
                       std::to_string(j) + "," + std::to_string(k) + ")";
            case Kind::NotNilpotent:
                return "lower central series does not reach zero";
        }
        return "";
    }
};

/// Nilpotent Lie algebra over Q, presented by its structure-constant tensor
/// [X_i, X_j] = sum_k c_ijk X_k. Immutable after construction; every
/// operation is a pure function.
class LieAlgebra {
public:
    /// Validating constructor. Throws InvalidInputError unless the table
    /// describes a nilpotent Lie algebra.
    static LieAlgebra from_brackets(std::size_t dim, const std::vector<BracketLine>& lines,
                                    std::string name = "") {
        LieAlgebra L = raw_from_brackets(dim, lines, std::move(name));
        ValidationResult v = L.validate();
        if (!v.ok()) throw InvalidInputError("not a nilpotent Lie algebra: " + v.message());
        return L;
    }

    /// Unchecked constructor from a full tensor (row-major c[i][j][k],
    /// 0-based); exists so violation reporting can be exercised.
    static LieAlgebra raw(std::size_t dim, std::vector<Rational> tensor, std::string name = "") {
        if (tensor.size() != dim * dim * dim)
            throw InvalidInputError("structure tensor has wrong size");
        LieAlgebra L;
        L.dim_ = dim;
        L.name_ = std::move(name);
        L.c_ = std::move(tensor);
        L.rebuild_pairs();
        return L;
    }

    /// Unchecked constructor from a bracket table (for the DSL front end,
    /// which validates separately and reports the verdict).
    static LieAlgebra raw_from_brackets(std::size_t dim, const std::vector<BracketLine>& lines,
                                        std::string name = "") {
        LieAlgebra L;
        L.dim_ = dim;
        L.name_ = std::move(name);
        L.c_.assign(dim * dim * dim, Rational(0));
        for (const BracketLine& line : lines) {
            if (line.i > dim || line.j > dim || line.i == 0 || line.j == 0)
                throw InvalidInputError("bracket line: basis index out of range");
            if (line.i <= line.j)
                throw InvalidInputError("bracket line: requires i > j");
            for (const BracketTerm& t : line.terms) {
                if (t.k == 0 || t.k > dim)
                    throw InvalidInputError("bracket term: basis index out of range");
                L.at(line.i - 1, line.j - 1, t.k - 1) += t.coeff;
                L.at(line.j - 1, line.i - 1, t.k - 1) -= t.coeff;
            }
        }
        L.rebuild_pairs();
        return L;
    }

    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// Structure constant c_ijk, all indices 0-based.
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    /// [X_i, X_j] as a coordinate vector, indices 0-based.
    Vec bracket_basis(std::size_t i, std::size_t j) const {
        Vec v(dim_);
        for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
        return v;
    }

    /// Bilinear extension of the bracket table.
    Vec bracket(const Vec& x, const Vec& y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw DimensionMismatchError("bracket: vector length mismatch");
        Vec out(dim_, Rational(0));
        for (const auto& [i, j] : pairs_) {
            const Rational f = x[i] * y[j] - x[j] * y[i];
            if (f == 0) continue;
            for (std::size_t k = 0; k < dim_; ++k) {
                const Rational& cc = c(i, j, k);
                if (cc != 0) out[k] += f * cc;
            }
        }
        return out;
    }

    bool is_abelian() const { return pairs_.empty(); }

    ValidationResult validate() const {
        // antisymmetry (also covers the diagonal [X_i, X_i] = 0)
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (c(i, j, k) != -c(j, i, k))
                        return {ValidationResult::Kind::AntisymmetryViolation, i + 1, j + 1,
                                k + 1};
        // Jacobi on basis triples
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = j + 1; k < dim_; ++k) {
                    Vec r = bracket_with_basis(bracket_basis(i, j), k);
                    add_into(r, bracket_with_basis(bracket_basis(j, k), i));
                    add_into(r, bracket_with_basis(bracket_basis(k, i), j));
                    if (!is_zero_vec(r))
                        return {ValidationResult::Kind::JacobiViolation, i + 1, j + 1, k + 1};
                }
        // nilpotency: the series must strictly decrease to zero within dim steps
        Subspace g = Subspace::full(dim_);
        while (g.dim() > 0) {
            Subspace next = bracket_with_full(g);
            if (next.dim() >= g.dim()) return {ValidationResult::Kind::NotNilpotent};
            g = next;
        }
        return {};
    }

    /// [g, g], the span of all basis brackets.
    Subspace derived_subalgebra() const {
        std::vector<Vec> rows;
        for (const auto& [i, j] : pairs_) rows.push_back(bracket_basis(i, j));
        return Subspace::from_spanning(dim_, rows);
    }

    /// g = g^0 >= g^1 = [g,g] >= g^2 = [g, g^1] >= ... down to zero.
    std::vector<Subspace> lower_central_series() const {
        std::vector<Subspace> series;
        series.push_back(Subspace::full(dim_));
        while (series.back().dim() > 0) {
            Subspace next = bracket_with_full(series.back());
            if (next.dim() >= series.back().dim())
                throw InvalidInputError("lower central series does not decrease: not nilpotent");
            series.push_back(next);
        }
        return series;
    }

    std::vector<std::size_t> lcs_dims() const {
        std::vector<std::size_t> dims;
        for (const Subspace& s : lower_central_series()) dims.push_back(s.dim());
        return dims;
    }

    /// Number of steps until the series vanishes; abelian algebras have step 1.
    std::size_t nilpotency_step() const { return lower_central_series().size() - 1; }

    bool is_two_step() const { return nilpotency_step() <= 2; }

    /// {x : [x, g] = 0}, the kernel of the stacked adjoint maps.
    Subspace center() const {
        RatMatrix m(dim_ * dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                for (std::size_t i = 0; i < dim_; ++i) m(j * dim_ + k, i) = c(i, j, k);
        return kernel(m);
    }

    /// True iff [g, s] is contained in s, checked on basis pairs.
    bool is_ideal(const Subspace& s) const {
        if (s.ambient_dim() != dim_)
            throw DimensionMismatchError("is_ideal: ambient dimension mismatch");
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t r = 0; r < s.dim(); ++r)
                if (!s.contains_vector(bracket_with_basis(s.basis_vector(r), i))) return false;
        return true;
    }

    /// Nonzero bracket pairs (i, j) with i < j, 0-based.
    const std::vector<std::pair<std::size_t, std::size_t>>& nonzero_pairs() const {
        return pairs_;
    }

private:
    LieAlgebra() = default;

    Rational& at(std::size_t i, std::size_t j, std::size_t k) {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    /// [v, X_k] for a coordinate vector v.
    Vec bracket_with_basis(const Vec& v, std::size_t k) const {
        Vec out(dim_, Rational(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (v[i] == 0) continue;
            for (std::size_t m = 0; m < dim_; ++m) {
                const Rational& cc = c(i, k, m);
                if (cc != 0) out[m] += v[i] * cc;
            }
        }
        return out;
    }

    /// span [g, s]
    Subspace bracket_with_full(const Subspace& s) const {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t r = 0; r < s.dim(); ++r)
                rows.push_back(bracket_with_basis(s.basis_vector(r), i));
        return Subspace::from_spanning(dim_, rows);
    }

    static void add_into(Vec& a, const Vec& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    }

    void rebuild_pairs() {
        pairs_.clear();
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (c(i, j, k) != 0) {
                        pairs_.emplace_back(i, j);
                        break;
                    }
    }

    std::size_t dim_ = 0;
    std::string name_;
    std::vector<Rational> c_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

inline LieAlgebra direct_product(const LieAlgebra& a, const LieAlgebra& b) {
    const std::size_t n = a.dim() + b.dim();
    std::vector<Rational> c(n * n * n, Rational(0));
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& {
        return c[(i * n + j) * n + k];
    };
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) at(i, j, k) = a.c(i, j, k);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k)
                at(a.dim() + i, a.dim() + j, a.dim() + k) = b.c(i, j, k);
    std::string name;
    if (!a.name().empty() && !b.name().empty()) name = a.name() + " × " + b.name();
    return LieAlgebra::raw(n, std::move(c), std::move(name));
}

/// The semidirect product g_D = V x| R for a nilpotent D acting on V:
/// basis (v_1..v_m, T) with V abelian and [T, v] = D v.
inline LieAlgebra semidirect_nilpotent(const RatMatrix& d, std::string name = "") {
    if (!d.is_square()) throw InvalidInputError("semidirect product: D must be square");
    const std::size_t m = d.rows();
    RatMatrix power = d;
    bool nilpotent = m == 0;
    for (std::size_t s = 0; s < m && !nilpotent; ++s) {
        nilpotent = true;
        for (std::size_t i = 0; i < m && nilpotent; ++i)
            for (std::size_t j = 0; j < m && nilpotent; ++j)
                if (power(i, j) != 0) nilpotent = false;
        if (!nilpotent) power = power * d;
    }
    if (!nilpotent) throw InvalidInputError("semidirect product: D is not nilpotent");

    std::vector<BracketLine> lines;
    for (std::size_t j = 0; j < m; ++j) {
        BracketLine line{m + 1, j + 1, {}};
        for (std::size_t k = 0; k < m; ++k)
            if (d(k, j) != 0) line.terms.push_back({k + 1, d(k, j)});
        if (!line.terms.empty()) lines.push_back(std::move(line));
    }
    return LieAlgebra::from_brackets(m + 1, lines, std::move(name));
}

/// Conjugates the structure tensor: the columns of P are the old coordinates
/// of the new basis vectors, so bracket_new(x, y) = P^{-1} bracket(Px, Py).
inline LieAlgebra change_of_basis(const LieAlgebra& L, const RatMatrix& p) {
    if (!p.is_square() || p.rows() != L.dim())
        throw InvalidInputError("change of basis: P has wrong shape");
    auto pinv = inverse(p);
    if (!pinv) throw InvalidInputError("change of basis: P is singular");
    const std::size_t n = L.dim();
    std::vector<Rational> c(n * n * n, Rational(0));
    std::vector<Vec> cols(n);
    for (std::size_t i = 0; i < n; ++i) {
        cols[i].resize(n);
        for (std::size_t r = 0; r < n; ++r) cols[i][r] = p(r, i);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec w = pinv->apply(L.bracket(cols[i], cols[j]));
            for (std::size_t k = 0; k < n; ++k) {
                c[(i * n + j) * n + k] = w[k];
                c[(j * n + i) * n + k] = -w[k];
            }
        }
    return LieAlgebra::raw(n, std::move(c));
}

}  // namespace nilorbit
