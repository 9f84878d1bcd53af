#pragma once

#include <cstddef>
#include <deque>
#include <utility>
#include <vector>

#include "nilorbit/error.hpp"
#include "nilorbit/polynomial.hpp"
#include "nilorbit/rational.hpp"

namespace nilorbit {

/// Ideal of Q[xi_1..xi_n] given by generators; zero generators are dropped.
struct PolyIdeal {
    std::size_t num_vars = 0;
    std::vector<MultiPoly> generators;

    PolyIdeal() = default;
    PolyIdeal(std::size_t n, std::vector<MultiPoly> gens) : num_vars(n) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            if (g.num_vars() != 0 && g.num_vars() != n)
                throw DimensionMismatchError("ideal generator: variable count mismatch");
            generators.push_back(g.num_vars() == n ? std::move(g)
                                                   : MultiPoly::constant(g.constant_value(), n));
        }
    }
};

namespace detail {

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] > b[i] ? a[i] : b[i];
    return m;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
    return m;
}

inline MultiPoly monomial_poly(std::size_t num_vars, const Monomial& m, const Rational& c) {
    return MultiPoly::from_terms(num_vars, {{m, c}});
}

}  // namespace detail

/// Full normal form of f against the list (not required to be a Groebner
/// basis): repeatedly cancels the leading term by any divisor, shifting
/// irreducible leading terms to the remainder.
inline MultiPoly normal_form(MultiPoly f, const std::vector<MultiPoly>& basis) {
    MultiPoly remainder = MultiPoly::constant(Rational(0), f.num_vars());
    while (!f.is_zero()) {
        const auto& [lm, lc] = f.leading_term();
        bool reduced = false;
        for (const MultiPoly& g : basis) {
            if (g.is_zero()) continue;
            const auto& [gm, gc] = g.leading_term();
            if (!detail::divides(gm, lm)) continue;
            f -= detail::monomial_poly(f.num_vars(), detail::mono_div(lm, gm), lc / gc) * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            MultiPoly lt = detail::monomial_poly(f.num_vars(), lm, lc);
            remainder += lt;
            f -= lt;
        }
    }
    return remainder;
}

inline MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    const auto& [fm, fc] = f.leading_term();
    const auto& [gm, gc] = g.leading_term();
    const Monomial l = detail::mono_lcm(fm, gm);
    return detail::monomial_poly(f.num_vars(), detail::mono_div(l, fm), Rational(1) / fc) * f -
           detail::monomial_poly(f.num_vars(), detail::mono_div(l, gm), Rational(1) / gc) * g;
}

struct GroebnerResult {
    std::vector<MultiPoly> basis;
    bool complete = false;        // false iff the reduction cap was hit
    bool contains_unit = false;   // some basis element is a nonzero constant
    std::size_t reductions = 0;   // S-polynomial reductions performed
};

/// Buchberger's algorithm under a cap on the number of S-polynomial
/// reductions. Pairs with coprime leading monomials are discarded
/// (Buchberger's first criterion). Deterministic: fixed monomial order,
/// FIFO pair queue, monic basis elements.
inline GroebnerResult buchberger(const std::vector<MultiPoly>& generators,
                                 std::size_t effort_cap) {
    GroebnerResult res;
    for (const MultiPoly& g : generators) {
        if (g.is_zero()) continue;
        res.basis.push_back((Rational(1) / g.leading_term().second) * g);
    }
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < res.basis.size(); ++i)
        for (std::size_t j = i + 1; j < res.basis.size(); ++j) pairs.emplace_back(i, j);

    for (const MultiPoly& g : res.basis)
        if (g.is_constant() && !g.is_zero()) res.contains_unit = true;
    if (res.contains_unit) {
        res.complete = true;
        return res;
    }

    while (!pairs.empty()) {
        if (res.reductions >= effort_cap) return res;  // incomplete
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Monomial& mi = res.basis[i].leading_term().first;
        const Monomial& mj = res.basis[j].leading_term().first;
        bool coprime = true;
        for (std::size_t v = 0; v < mi.size(); ++v)
            if (mi[v] > 0 && mj[v] > 0) {
                coprime = false;
                break;
            }
        if (coprime) continue;

        MultiPoly r = normal_form(s_polynomial(res.basis[i], res.basis[j]), res.basis);
        ++res.reductions;
        if (r.is_zero()) continue;
        r = (Rational(1) / r.leading_term().second) * r;
        if (r.is_constant()) {
            res.contains_unit = true;
            res.complete = true;
            res.basis.push_back(r);
            return res;
        }
        const std::size_t k = res.basis.size();
        res.basis.push_back(std::move(r));
        for (std::size_t a = 0; a < k; ++a) pairs.emplace_back(a, k);
    }
    res.complete = true;
    return res;
}

enum class Membership { Member, NotMember, Unknown };

/// Decides f in sqrt(ideal) by the Rabinowitsch device: adjoin t and test
/// whether 1 lies in ideal + (1 - t*f). Member certifies the zero-set
/// containment V(ideal) subset of V(f) over the complex numbers, hence also
/// over the reals. Unknown only when the reduction cap is hit.
inline Membership radical_membership(const PolyIdeal& ideal, const MultiPoly& f,
                                     std::size_t effort_cap = 10000) {
    if (f.num_vars() != 0 && f.num_vars() != ideal.num_vars)
        throw DimensionMismatchError("radical membership: variable count mismatch");
    if (f.is_zero()) return Membership::Member;
    if (ideal.generators.empty()) return Membership::NotMember;

    const std::size_t n = ideal.num_vars;
    std::vector<MultiPoly> gens;
    gens.reserve(ideal.generators.size() + 1);
    for (const MultiPoly& g : ideal.generators) gens.push_back(g.extended(n + 1));
    const MultiPoly t = MultiPoly::variable(n, n + 1);
    gens.push_back(MultiPoly::constant(Rational(1), n + 1) - t * f.extended(n + 1));

    GroebnerResult res = buchberger(gens, effort_cap);
    if (res.contains_unit) return Membership::Member;
    if (!res.complete) return Membership::Unknown;
    return Membership::NotMember;
}

}  // namespace nilorbit
