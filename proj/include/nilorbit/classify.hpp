#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "nilorbit/catalog.hpp"
#include "nilorbit/coadjoint.hpp"
#include "nilorbit/error.hpp"
#include "nilorbit/lie_algebra.hpp"

namespace nilorbit {

/// The isomorphism-invariant tuple driving classification and rigidity
/// comparison. Every field except the class-T tag is exact and
/// deterministic; the tag is three-valued and reported as computed.
struct InvariantFingerprint {
    std::size_t dim = 0;
    std::vector<std::size_t> lcs_dims;
    std::size_t center_dim = 0;
    std::size_t index = 0;
    std::size_t real_rank = 0;
    bool two_step = false;
    ClassTStatus class_t_status = ClassTStatus::Unknown;
};

inline InvariantFingerprint fingerprint(const LieAlgebra& L, const ClassTOptions& opts = {}) {
    InvariantFingerprint fp;
    fp.dim = L.dim();
    fp.lcs_dims = L.lcs_dims();
    fp.center_dim = L.center().dim();
    fp.index = index(L);
    fp.real_rank = L.dim() - fp.lcs_dims[1];
    fp.two_step = fp.lcs_dims.size() <= 3;  // series (n, d, 0) or shorter
    fp.class_t_status = class_t(L, opts).status;
    return fp;
}

/// (lcs_dims, center_dim, index): pairwise distinct across the dim <= 5
/// classes, hence a complete invariant there. Cheap to compute (all exact,
/// no sampling, no Groebner run).
using ClassifyingTuple = std::tuple<std::vector<std::size_t>, std::size_t, std::size_t>;

inline ClassifyingTuple classifying_tuple(const LieAlgebra& L) {
    return {L.lcs_dims(), L.center().dim(), index(L)};
}

namespace classify_detail {

struct ClassRow {
    std::string key;
    ClassifyingTuple tuple;
};

inline const std::vector<ClassRow>& class_table() {
    static const std::vector<ClassRow> table = [] {
        std::vector<ClassRow> rows;
        for (const CatalogEntry& e : catalog_list()) {
            if (e.dim > 5) continue;
            rows.push_back({e.key, classifying_tuple(catalog_make(e.key))});
        }
        return rows;
    }();
    return table;
}

}  // namespace classify_detail

/// Identifies the isomorphism class of a nilpotent algebra of dimension at
/// most 5, returning its catalog key.
inline std::string classify_dim_le5(const LieAlgebra& L) {
    if (L.dim() > 5)
        throw OutOfScopeError("classification implemented only for dimension <= 5");
    const ClassifyingTuple t = classifying_tuple(L);
    for (const auto& row : classify_detail::class_table())
        if (row.tuple == t) return row.key;
    throw InternalInconsistencyError(
        "no catalog class matches; the input cannot be a validated nilpotent algebra");
}

struct RigidityReport {
    enum class Verdict { DistinguishedByInvariants, NotDistinguishedHere };
    bool same_rr = false;
    bool same_index = false;
    bool parity_obstruction = false;  // dims differ by an odd number
    std::vector<std::string> separating_invariants;
    Verdict verdict = Verdict::NotDistinguishedHere;
};

inline std::string to_string(RigidityReport::Verdict v) {
    return v == RigidityReport::Verdict::DistinguishedByInvariants
               ? "DistinguishedByInvariants"
               : "NotDistinguishedHere";
}

/// Mirrors the rigidity-separation arguments: collect every invariant on
/// which the two algebras differ, plus the dimension-parity obstruction.
/// Deliberately says nothing about Morita equivalence itself.
inline RigidityReport compare(const LieAlgebra& a, const LieAlgebra& b,
                              const ClassTOptions& opts = {}) {
    const InvariantFingerprint fa = fingerprint(a, opts);
    const InvariantFingerprint fb = fingerprint(b, opts);
    RigidityReport r;
    r.same_rr = fa.real_rank == fb.real_rank;
    r.same_index = fa.index == fb.index;
    r.parity_obstruction = (fa.dim > fb.dim ? fa.dim - fb.dim : fb.dim - fa.dim) % 2 == 1;
    if (fa.dim != fb.dim) r.separating_invariants.push_back("dim");
    if (fa.lcs_dims != fb.lcs_dims) r.separating_invariants.push_back("lcs_dims");
    if (fa.center_dim != fb.center_dim) r.separating_invariants.push_back("center_dim");
    if (!r.same_index) r.separating_invariants.push_back("index");
    if (!r.same_rr) r.separating_invariants.push_back("real_rank");
    if (fa.two_step != fb.two_step) r.separating_invariants.push_back("two_step");
    const bool ta = fa.class_t_status != ClassTStatus::Unknown;
    const bool tb = fb.class_t_status != ClassTStatus::Unknown;
    if (ta && tb && fa.class_t_status != fb.class_t_status)
        r.separating_invariants.push_back("class_t");
    r.verdict = (!r.separating_invariants.empty() || r.parity_obstruction)
                    ? RigidityReport::Verdict::DistinguishedByInvariants
                    : RigidityReport::Verdict::NotDistinguishedHere;
    return r;
}

}  // namespace nilorbit
