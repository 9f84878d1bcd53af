#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "nilorbit/matrix.hpp"
#include "nilorbit/rational.hpp"

namespace nilorbit {

/// Linear subspace of Q^n, stored as a reduced row-echelon basis. The RREF
/// storage is a canonical form: two subspaces are equal iff their
/// representations are identical, so no tolerance questions arise.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim)
        : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

    static Subspace full(std::size_t ambient_dim) {
        Subspace s(ambient_dim);
        s.basis_ = RatMatrix::identity(ambient_dim);
        return s;
    }

    /// Span of the rows of `vectors` (need not be independent).
    static Subspace from_spanning(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
        RatMatrix m(vectors.size(), ambient_dim);
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            if (vectors[i].size() != ambient_dim)
                throw DimensionMismatchError("subspace: vector length != ambient dimension");
            m.set_row(i, vectors[i]);
        }
        RrefResult r = rref(std::move(m));
        RatMatrix basis(r.pivots.size(), ambient_dim);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) basis.set_row(i, r.mat.row(i));
        Subspace s(ambient_dim);
        s.basis_ = std::move(basis);
        return s;
    }

    /// Adopts a matrix already known to be a full-row-rank RREF basis.
    static Subspace from_rref(RatMatrix basis) {
        Subspace s(basis.cols());
        s.basis_ = std::move(basis);
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    /// Membership by reduction against the RREF basis.
    bool contains_vector(const Vec& v) const {
        if (v.size() != ambient_)
            throw DimensionMismatchError("subspace membership: length mismatch");
        Vec r = v;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t lead = 0;
            while (lead < ambient_ && basis_(i, lead) == 0) ++lead;
            if (lead == ambient_) continue;
            if (r[lead] == 0) continue;
            const Rational f = r[lead];  // pivot entries are 1
            for (std::size_t j = lead; j < ambient_; ++j) r[j] -= f * basis_(i, j);
        }
        return is_zero_vec(r);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    RatMatrix basis_;
};

inline void check_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatchError("subspace operation: ambient dimensions differ");
}

inline Subspace sum(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
    for (std::size_t i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
    return Subspace::from_spanning(a.ambient_dim(), rows);
}

/// Annihilator s^perp = {xi : <xi, s> = 0}, computed as the kernel of the
/// basis matrix. An order-reversing involution between g and g*.
inline Subspace annihilator(const Subspace& s) {
    if (s.dim() == 0) return Subspace::full(s.ambient_dim());
    return Subspace::from_rref(kernel_basis(s.basis()));
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b);
    return annihilator(sum(annihilator(a), annihilator(b)));
}

/// True iff a contains b.
inline bool contains(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b);
    for (std::size_t i = 0; i < b.dim(); ++i)
        if (!a.contains_vector(b.basis_vector(i))) return false;
    return true;
}

inline bool equals(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b);
    return a == b;
}

/// Kernel of a matrix as a subspace of Q^cols.
inline Subspace kernel(const RatMatrix& m) {
    return Subspace::from_rref(kernel_basis(m));
}

}  // namespace nilorbit
