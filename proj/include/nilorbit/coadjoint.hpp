#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilorbit/error.hpp"
#include "nilorbit/groebner.hpp"
#include "nilorbit/lie_algebra.hpp"
#include "nilorbit/matrix.hpp"
#include "nilorbit/rng.hpp"
#include "nilorbit/skew_form.hpp"
#include "nilorbit/subspace.hpp"

namespace nilorbit {

/// Coadjoint isotropy g(xi) = {X : <xi, [X, g]> = 0}, the kernel of the
/// evaluated Kirillov form. Always contains the center.
inline Subspace isotropy(const LieAlgebra& L, const Covector& xi) {
    return kernel(kirillov_matrix(L, xi));
}

/// dim O_xi = dim g - dim g(xi); even, by skew-rank parity.
inline std::size_t orbit_dim(const LieAlgebra& L, const Covector& xi) {
    return rank(kirillov_matrix(L, xi));
}

/// ind g = min over xi of dim g(xi), computed exactly as dim g minus the
/// generic rank of the symbolic form (no sampling involved).
inline std::size_t index(const LieAlgebra& L) {
    return L.dim() - generic_skew_rank(symbolic_skew_form(L));
}

/// RR(C*(G)) = dim [g,g]^perp = dim g - dim [g,g].
inline std::size_t real_rank(const LieAlgebra& L) {
    return L.dim() - L.derived_subalgebra().dim();
}

struct OrbitReport {
    Covector xi;
    Subspace isotropy;
    std::size_t orbit_dim = 0;
    bool is_flat = false;
    /// Present iff the orbit is flat: O_xi = xi + g(xi)^perp.
    std::optional<std::pair<Covector, Subspace>> flat_affine_description;
};

/// Flatness is decided by the ideal criterion: O_xi = xi + g(xi)^perp iff
/// g(xi) is an ideal of g.
inline OrbitReport orbit_report(const LieAlgebra& L, const Covector& xi) {
    OrbitReport r{xi, isotropy(L, xi)};
    r.orbit_dim = L.dim() - r.isotropy.dim();
    r.is_flat = L.is_ideal(r.isotropy);
    if (r.is_flat) r.flat_affine_description = {xi, annihilator(r.isotropy)};
    return r;
}

enum class ClassTStatus { Holds, Fails, Unknown };
enum class ClassTCertificate { VacuousAbelian, RankTwoFastPath, RadicalCertificate };

inline std::string to_string(ClassTStatus s) {
    switch (s) {
        case ClassTStatus::Holds: return "Holds";
        case ClassTStatus::Fails: return "Fails";
        case ClassTStatus::Unknown: return "Unknown";
    }
    return "";
}

inline std::string to_string(ClassTCertificate c) {
    switch (c) {
        case ClassTCertificate::VacuousAbelian: return "VacuousAbelian";
        case ClassTCertificate::RankTwoFastPath: return "RankTwoFastPath";
        case ClassTCertificate::RadicalCertificate: return "RadicalCertificate";
    }
    return "";
}

struct ClassTVerdict {
    ClassTStatus status = ClassTStatus::Unknown;
    std::optional<ClassTCertificate> certificate;  // present iff Holds
    std::optional<Covector> witness;               // present iff Fails
    std::size_t samples_tried = 0;
    std::size_t generic_rank = 0;
};

struct ClassTOptions {
    std::size_t budget = 2000;        // random covectors in the witness search
    std::uint64_t seed = 0;
    std::size_t effort_cap = 10000;   // S-polynomial reductions per membership test
    std::size_t grid_dim_cap = 7;     // exhaustive {-2..2}^n grid up to this dimension
};

/// Seeded sampler for covectors. Draws are generic integer covectors with
/// coordinates in [-10^6, 10^6]; one draw in four instead zeroes each
/// coordinate with probability 1/2, so that positive-codimension strata of
/// the orbit space are actually visited.
inline Covector sample_covector(Rng& rng, std::size_t n) {
    const bool sparse = rng.uniform(0, 3) == 3;
    Covector xi(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sparse && rng.uniform(0, 1) == 0)
            xi[i] = 0;
        else
            xi[i] = Rational(rng.uniform(-1000000, 1000000));
    }
    return xi;
}

namespace detail {

inline bool annihilates(const Covector& xi, const Subspace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i)
        if (dot(xi, s.basis_vector(i)) != 0) return false;
    return true;
}

}  // namespace detail

/// Class-T decision pipeline: abelian fast path, generic-rank-2 fast path
/// (rank below 2 forces B_xi = 0, i.e. xi in [g,g]^perp), then witness
/// search over the small grid plus seeded random covectors, then symbolic
/// certification that the rank-degeneracy locus lies inside [g,g]^perp.
/// Unknown is an honest outcome, never silently coerced.
inline ClassTVerdict class_t(const LieAlgebra& L, const ClassTOptions& opts = {}) {
    ClassTVerdict verdict;
    if (L.is_abelian()) {
        verdict.status = ClassTStatus::Holds;
        verdict.certificate = ClassTCertificate::VacuousAbelian;
        return verdict;
    }

    const Matrix<MultiPoly> form = symbolic_skew_form(L);
    const std::size_t grk = generic_skew_rank(form);
    verdict.generic_rank = grk;
    if (grk == 2) {
        verdict.status = ClassTStatus::Holds;
        verdict.certificate = ClassTCertificate::RankTwoFastPath;
        return verdict;
    }

    const std::size_t n = L.dim();
    const Subspace derived = L.derived_subalgebra();
    auto try_witness = [&](const Covector& xi) -> bool {
        ++verdict.samples_tried;
        if (detail::annihilates(xi, derived)) return false;
        if (rank(kirillov_matrix(L, xi)) >= grk) return false;
        verdict.status = ClassTStatus::Fails;
        verdict.witness = xi;
        return true;
    };

    if (n <= opts.grid_dim_cap) {
        Covector xi(n, Rational(-2));
        std::vector<int> odo(n, -2);
        while (true) {
            if (try_witness(xi)) return verdict;
            std::size_t p = 0;
            while (p < n && odo[p] == 2) {
                odo[p] = -2;
                xi[p] = Rational(-2);
                ++p;
            }
            if (p == n) break;
            ++odo[p];
            xi[p] = Rational(odo[p]);
        }
    }
    Rng rng = Rng::substream(opts.seed, 0x636c7374);  // "clst"
    for (std::size_t s = 0; s < opts.budget; ++s)
        if (try_witness(sample_covector(rng, n))) return verdict;

    // Symbolic certificate: every linear form vanishing on a derived-algebra
    // basis vector must contain the order-grk degeneracy locus in its zero
    // set; then rank < grk implies xi in [g,g]^perp.
    PolyIdeal locus(n, sub_pfaffians(form, grk));
    bool all_member = true;
    for (std::size_t b = 0; b < derived.dim() && all_member; ++b) {
        std::vector<std::pair<Monomial, Rational>> terms;
        const Vec v = derived.basis_vector(b);
        for (std::size_t k = 0; k < n; ++k) {
            if (v[k] == 0) continue;
            Monomial m(n, 0);
            m[k] = 1;
            terms.emplace_back(std::move(m), v[k]);
        }
        const MultiPoly linear_form = MultiPoly::from_terms(n, terms);
        if (radical_membership(locus, linear_form, opts.effort_cap) != Membership::Member)
            all_member = false;
    }
    if (all_member) {
        verdict.status = ClassTStatus::Holds;
        verdict.certificate = ClassTCertificate::RadicalCertificate;
        return verdict;
    }
    verdict.status = ClassTStatus::Unknown;
    return verdict;
}

/// Constructive witness for Lemma-style covectors: xi vanishing on [g,[g,g]]
/// but not on [g,g]; then [g,g] is contained in g(xi) and xi is outside
/// [g,g]^perp.
inline Covector md1_witness(const LieAlgebra& L) {
    const Subspace derived = L.derived_subalgebra();
    if (derived.dim() == 0)
        throw NoWitnessError("md1 witness requires a nonabelian algebra");
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        Vec e(L.dim(), Rational(0));
        e[i] = 1;
        for (std::size_t r = 0; r < derived.dim(); ++r)
            rows.push_back(L.bracket(derived.basis_vector(r), e));
    }
    const Subspace second = Subspace::from_spanning(L.dim(), rows);  // [g, [g,g]]
    const Subspace candidates = annihilator(second);
    for (std::size_t i = 0; i < candidates.dim(); ++i) {
        Covector xi = candidates.basis_vector(i);
        if (!detail::annihilates(xi, derived)) return xi;
    }
    throw InternalInconsistencyError("md1 witness not found for nonabelian nilpotent algebra");
}

/// The inequality dim g <= ind g + dim [g,g]^perp; guaranteed for class-T
/// algebras, and checkable (and falsifiable) for any algebra.
inline bool md2_check(const LieAlgebra& L) {
    return L.dim() <= index(L) + real_rank(L);
}

/// Frequencies of orbit dimensions over seeded random covectors;
/// deterministic for a fixed seed.
inline std::map<std::size_t, std::size_t> orbit_dim_histogram(const LieAlgebra& L,
                                                              std::size_t samples,
                                                              std::uint64_t seed) {
    if (samples < 1) throw InvalidInputError("histogram requires at least one sample");
    std::map<std::size_t, std::size_t> hist;
    Rng rng = Rng::substream(seed, 0x68697374);  // "hist"
    for (std::size_t s = 0; s < samples; ++s)
        ++hist[orbit_dim(L, sample_covector(rng, L.dim()))];
    return hist;
}

}  // namespace nilorbit
