#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nilorbit/error.hpp"
#include "nilorbit/lie_algebra.hpp"

namespace nilorbit {

struct CatalogEntry {
    std::string key;
    std::size_t dim;
    std::string provenance;
};

namespace catalog_detail {

inline LieAlgebra abelian(std::size_t k) {
    if (k < 1) throw CatalogError("a_k requires k >= 1");
    return LieAlgebra::from_brackets(k, {}, "a" + std::to_string(k));
}

inline LieAlgebra filiform(std::size_t n) {
    if (n < 3) throw CatalogError("f_n requires n >= 3");
    std::vector<BracketLine> lines;
    for (std::size_t j = 2; j + 1 <= n; ++j) lines.push_back({n, j, {{j - 1, Rational(1)}}});
    return LieAlgebra::from_brackets(n, lines, "f_" + std::to_string(n));
}

inline LieAlgebra heisenberg(std::size_t dim) {
    if (dim < 3 || dim % 2 == 0) throw CatalogError("h_d requires odd d >= 3");
    std::vector<BracketLine> lines;
    for (std::size_t i = 1; 2 * i + 1 <= dim; ++i)
        lines.push_back({2 * i + 1, 2 * i, {{1, Rational(1)}}});
    return LieAlgebra::from_brackets(dim, lines, "h_" + std::to_string(dim));
}

/// h_{m,n}: basis X_1..X_m, Y_0..Y_n in that order, [X_i, Y_j] = Y_{i+j}
/// whenever i + j <= n. Stored lower-triangular, hence the sign flip.
inline LieAlgebra h_mn(std::size_t m, std::size_t n) {
    if (m < 1 || m < n) throw CatalogError("h_{m,n} requires m >= n >= 0 and m >= 1");
    const std::size_t dim = m + n + 1;
    auto y = [m](std::size_t j) { return m + 1 + j; };  // 1-based index of Y_j
    std::vector<BracketLine> lines;
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 1; i <= m; ++i) {
            if (i + j > n) continue;
            lines.push_back({y(j), i, {{y(i + j), Rational(-1)}}});
        }
    return LieAlgebra::from_brackets(dim, lines,
                                     "h_" + std::to_string(m) + "_" + std::to_string(n));
}

inline LieAlgebra fixed_small(const std::string& key) {
    auto make = [&key](std::size_t dim, std::vector<BracketLine> lines) {
        return LieAlgebra::from_brackets(dim, lines, key);
    };
    const Rational one(1);
    if (key == "n3") return make(3, {{3, 2, {{1, one}}}});
    if (key == "n4") return make(4, {{4, 3, {{2, one}}}, {4, 2, {{1, one}}}});
    if (key == "n5_1") return make(5, {{5, 4, {{1, one}}}, {3, 2, {{1, one}}}});
    if (key == "n5_2") return make(5, {{5, 4, {{2, one}}}, {5, 3, {{1, one}}}});
    if (key == "n5_3")
        return make(5, {{5, 4, {{2, one}}}, {5, 2, {{1, one}}}, {4, 3, {{1, one}}}});
    if (key == "n5_4")
        return make(5, {{5, 4, {{3, one}}}, {5, 3, {{2, one}}}, {4, 3, {{1, one}}}});
    if (key == "n5_5")
        return make(5, {{5, 4, {{3, one}}}, {5, 3, {{2, one}}}, {5, 2, {{1, one}}}});
    if (key == "n5_6")
        return make(5, {{5, 4, {{3, one}}},
                        {5, 3, {{2, one}}},
                        {5, 2, {{1, one}}},
                        {4, 3, {{1, one}}}});
    if (key == "n6_15")
        return make(6, {{6, 5, {{3, one}}}, {6, 4, {{1, one}}}, {5, 4, {{2, one}}}});
    if (key == "n6_18")
        return make(6, {{6, 5, {{3, one}}}, {6, 4, {{2, one}}}, {6, 3, {{1, one}}}});
    throw CatalogError("unknown catalog key: " + key);
}

inline std::optional<std::size_t> parse_count(const std::string& s) {
    if (s.empty() || s.size() > 6) return std::nullopt;
    std::size_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

inline LieAlgebra make_atomic(const std::string& key) {
    if (key.empty()) throw CatalogError("empty catalog key");
    const char family = key[0];
    std::string rest = key.substr(1);
    if (!rest.empty() && rest[0] == '_') rest = rest.substr(1);
    const std::size_t sep = rest.find('_');
    if (family == 'a' && sep == std::string::npos) {
        if (auto k = parse_count(rest)) return abelian(*k);
    } else if (family == 'f' && sep == std::string::npos) {
        if (auto n = parse_count(rest)) return filiform(*n);
    } else if (family == 'h') {
        if (sep == std::string::npos) {
            if (auto d = parse_count(rest)) return heisenberg(*d);
        } else {
            auto m = parse_count(rest.substr(0, sep));
            auto n = parse_count(rest.substr(sep + 1));
            if (m && n) return h_mn(*m, *n);
        }
    } else if (family == 'n') {
        return fixed_small(key);
    }
    throw CatalogError("unknown catalog key: " + key);
}

/// Splits a composite key on the product sign; both the UTF-8 times sign
/// and a plain "x" are accepted, and whitespace is ignored.
inline std::vector<std::string> split_key(const std::string& key) {
    std::string compact;
    for (std::size_t i = 0; i < key.size(); ++i) {
        unsigned char c = key[i];
        if (c == ' ' || c == '\t') continue;
        if (c == 0xc3 && i + 1 < key.size() && static_cast<unsigned char>(key[i + 1]) == 0x97) {
            compact += 'x';
            ++i;
            continue;
        }
        compact += static_cast<char>(c);
    }
    std::vector<std::string> parts;
    std::string cur;
    for (char c : compact) {
        if (c == 'x') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace catalog_detail

/// Builds the named algebra. Composite keys combine atoms with the product
/// sign, associating left to right: "a2 × n3", "h_3 × h_5".
inline LieAlgebra catalog_make(const std::string& key) {
    const std::vector<std::string> parts = catalog_detail::split_key(key);
    LieAlgebra result = catalog_detail::make_atomic(parts[0]);
    std::string name = result.name();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        LieAlgebra next = catalog_detail::make_atomic(parts[i]);
        name += " × " + next.name();
        result = direct_product(result, next);
    }
    result.set_name(name);
    return result;
}

/// The built-in entries: one representative per isomorphism class in
/// dimension <= 5, the named dimension-6 algebras, and samples of the
/// parametric families (which catalog_make accepts for any parameters).
inline const std::vector<CatalogEntry>& catalog_list() {
    static const std::vector<CatalogEntry> entries = {
        {"a1", 1, "abelian line"},
        {"a2", 2, "abelian plane"},
        {"a3", 3, "abelian, dim 3"},
        {"n3", 3, "dim-3 Heisenberg algebra (= h_3 = f_3)"},
        {"a4", 4, "abelian, dim 4"},
        {"a1 × n3", 4, "line times Heisenberg"},
        {"n4", 4, "dim-4 filiform algebra (= f_4)"},
        {"a5", 5, "abelian, dim 5"},
        {"a2 × n3", 5, "plane times Heisenberg"},
        {"a1 × n4", 5, "line times f_4"},
        {"n5_1", 5, "dim-5 Heisenberg algebra (= h_5)"},
        {"n5_2", 5, "two-step, two-dimensional center"},
        {"n5_3", 5, "three-step, orbits of mixed dimension"},
        {"n5_4", 5, "three-step with flat generic orbits"},
        {"n5_5", 5, "dim-5 filiform algebra (= f_5)"},
        {"n5_6", 5, "three-step, orbits of mixed dimension"},
        {"n6_15", 6, "free two-step algebra on 3 generators"},
        {"n6_18", 6, "three-step companion of n6_15 with equal (RR, ind)"},
        {"f_6", 6, "filiform family"},
        {"f_7", 7, "filiform family"},
        {"f_8", 8, "filiform family"},
        {"f_9", 9, "filiform family"},
        {"f_10", 10, "filiform family"},
        {"h_7", 7, "Heisenberg family"},
        {"h_9", 9, "Heisenberg family"},
        {"h_3_2", 6, "h_{m,n} family, all orbits flat"},
        {"h_3_3", 7, "h_{m,n} family, all orbits flat"},
    };
    return entries;
}

}  // namespace nilorbit
