#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nilorbit/error.hpp"
#include "nilorbit/rational.hpp"

namespace nilorbit {

/// Exponent vector; length equals the number of variables of the owning ring.
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

/// Graded reverse lexicographic order (fixed for the whole artifact, so
/// Groebner runs are deterministic). Ties in total degree are broken at the
/// rightmost differing exponent, where the smaller exponent wins.
struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }
};

/// Sparse multivariate polynomial over Q in the dual coordinates xi_1..xi_n.
/// Canonical: no zero coefficients are stored, so equal polynomials have
/// identical term maps. A polynomial with num_vars == 0 is a plain constant
/// and promotes to any ring on contact.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexLess>;

    MultiPoly() : num_vars_(0) {}
    MultiPoly(int c) : num_vars_(0) { set_constant(Rational(c)); }
    MultiPoly(const Rational& c) : num_vars_(0) { set_constant(c); }

    static MultiPoly constant(const Rational& c, std::size_t num_vars) {
        MultiPoly p;
        p.num_vars_ = num_vars;
        p.set_constant(c);
        return p;
    }

    /// The monomial xi_{var+1}, i.e. variable index is 0-based.
    static MultiPoly variable(std::size_t var, std::size_t num_vars) {
        if (var >= num_vars) throw InvalidInputError("polynomial variable index out of range");
        MultiPoly p;
        p.num_vars_ = num_vars;
        Monomial m(num_vars, 0);
        m[var] = 1;
        p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }

    static MultiPoly from_terms(std::size_t num_vars,
                                const std::vector<std::pair<Monomial, Rational>>& terms) {
        MultiPoly p;
        p.num_vars_ = num_vars;
        for (const auto& [m, c] : terms) {
            if (m.size() != num_vars)
                throw InvalidInputError("polynomial term: exponent vector length mismatch");
            p.add_term(m, c);
        }
        return p;
    }

    std::size_t num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        return terms_.begin()->second;
    }
    const TermMap& terms() const { return terms_; }

    unsigned degree() const {
        if (terms_.empty()) return 0;
        return total_degree(terms_.rbegin()->first);
    }

    const std::pair<const Monomial, Rational>& leading_term() const {
        if (terms_.empty()) throw InvalidInputError("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    friend MultiPoly operator-(const MultiPoly& p) {
        MultiPoly q = p;
        for (auto& [m, c] : q.terms_) c = -c;
        return q;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = promote(a, b);
        for (const auto& [m, c] : y.terms_) x.add_term(m, c);
        return x;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = promote(a, b);
        for (const auto& [m, c] : y.terms_) x.add_term(m, -c);
        return x;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        auto [x, y] = promote(a, b);
        MultiPoly out;
        out.num_vars_ = x.num_vars_;
        for (const auto& [ma, ca] : x.terms_) {
            for (const auto& [mb, cb] : y.terms_) {
                Monomial m(out.num_vars_, 0);
                for (std::size_t i = 0; i < out.num_vars_; ++i) m[i] = ma[i] + mb[i];
                out.add_term(m, ca * cb);
            }
        }
        return out;
    }

    friend MultiPoly operator*(const Rational& c, const MultiPoly& p) {
        MultiPoly q;
        q.num_vars_ = p.num_vars_;
        if (c == 0) return q;
        for (const auto& [m, coef] : p.terms_) q.terms_.emplace(m, c * coef);
        return q;
    }

    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
    MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.num_vars_ == b.num_vars_) return a.terms_ == b.terms_;
        if (a.num_vars_ == 0 && a.is_constant())
            return b.is_constant() && a.constant_value() == b.constant_value();
        if (b.num_vars_ == 0 && b.is_constant())
            return a.is_constant() && a.constant_value() == b.constant_value();
        return false;
    }

    /// Ring homomorphism Q[xi_1..xi_n] -> Q at the given point.
    Rational evaluate(const Covector& point) const {
        if (num_vars_ != 0 && point.size() != num_vars_)
            throw DimensionMismatchError("polynomial evaluation: variable count mismatch");
        Rational sum(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
            sum += t;
        }
        return sum;
    }

    /// Reinterprets the polynomial in a ring with more variables (appended).
    MultiPoly extended(std::size_t new_num_vars) const {
        if (new_num_vars < num_vars_)
            throw InvalidInputError("polynomial extension cannot drop variables");
        MultiPoly out;
        out.num_vars_ = new_num_vars;
        for (const auto& [m, c] : terms_) {
            Monomial e(new_num_vars, 0);
            std::copy(m.begin(), m.end(), e.begin());
            out.terms_.emplace(std::move(e), c);
        }
        return out;
    }

    std::string str(const std::string& var_prefix = "x") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            if (!first)
                os << (c > 0 ? " + " : " - ");
            else if (c < 0)
                os << "-";
            const Rational mag = abs(c);
            first = false;
            bool printed_coeff = false;
            if (mag != 1 || total_degree(it->first) == 0) {
                os << mag.str();
                printed_coeff = true;
            }
            bool any_var = false;
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                if (it->first[i] == 0) continue;
                if (printed_coeff || any_var) os << "*";
                any_var = true;
                os << var_prefix << (i + 1);
                if (it->first[i] > 1) os << "^" << it->first[i];
            }
        }
        return os.str();
    }

private:
    void set_constant(const Rational& c) {
        if (c != 0) terms_.emplace(Monomial(num_vars_, 0), c);
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Aligns operands into a common ring; constants promote, genuinely
    /// different variable counts are an error.
    static std::pair<MultiPoly, MultiPoly> promote(const MultiPoly& a, const MultiPoly& b) {
        if (a.num_vars_ == b.num_vars_) return {a, b};
        if (a.num_vars_ == 0 && a.is_constant())
            return {MultiPoly::constant(a.constant_value(), b.num_vars_), b};
        if (b.num_vars_ == 0 && b.is_constant())
            return {a, MultiPoly::constant(b.constant_value(), a.num_vars_)};
        throw DimensionMismatchError("polynomial arithmetic: variable count mismatch");
    }

    std::size_t num_vars_;
    TermMap terms_;
};

}  // namespace nilorbit
