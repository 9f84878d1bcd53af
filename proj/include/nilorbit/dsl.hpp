#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilorbit/error.hpp"
#include "nilorbit/lie_algebra.hpp"
#include "nilorbit/rational.hpp"

namespace nilorbit {

/// One canonical bracket line of a document: [e_i, e_j] = sum of terms with
/// i > j, term indices strictly increasing, no zero coefficients.
struct DocLine {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<std::pair<std::size_t, Rational>> terms;  // (k, coefficient)
    std::size_t source_line = 0;                          // 1-based, 0 if synthesized

    friend bool operator==(const DocLine& a, const DocLine& b) {
        return a.i == b.i && a.j == b.j && a.terms == b.terms;
    }
};

/// Parsed structure-constant document, held in canonical form: lines sorted
/// by (i, j), duplicates rejected at parse time.
struct AlgebraDocument {
    std::string name;
    std::size_t dim = 0;
    std::vector<DocLine> lines;

    friend bool operator==(const AlgebraDocument& a, const AlgebraDocument& b) {
        return a.name == b.name && a.dim == b.dim && a.lines == b.lines;
    }
};

namespace dsl_detail {

struct Token {
    enum class Kind { Ident, Int, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    std::size_t line = 0;
    std::size_t col = 0;
};

class LineLexer {
public:
    LineLexer(std::string_view text, std::size_t line_no) : text_(text), line_(line_no) {}

    Token next() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
        if (pos_ >= text_.size() || text_[pos_] == '#')
            return {Token::Kind::End, "", line_, pos_ + 1};
        const std::size_t start = pos_;
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return {Token::Kind::Ident, std::string(text_.substr(start, pos_ - start)), line_,
                    start + 1};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return {Token::Kind::Int, std::string(text_.substr(start, pos_ - start)), line_,
                    start + 1};
        }
        if (std::string("[],=+-*/").find(c) != std::string::npos) {
            ++pos_;
            return {Token::Kind::Symbol, std::string(1, c), line_, start + 1};
        }
        throw ParseError(line_, start + 1, "unexpected character '" + std::string(1, c) + "'");
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

class LineParser {
public:
    LineParser(std::string_view text, std::size_t line_no) : lexer_(text, line_no) { advance(); }

    const Token& peek() const { return tok_; }

    Token expect_symbol(const std::string& s) {
        if (tok_.kind != Token::Kind::Symbol || tok_.text != s)
            throw ParseError(tok_.line, tok_.col, "expected '" + s + "'" + found());
        return take();
    }

    Token expect_ident() {
        if (tok_.kind != Token::Kind::Ident)
            throw ParseError(tok_.line, tok_.col, "expected identifier" + found());
        return take();
    }

    Token expect_keyword(const std::string& kw) {
        if (tok_.kind != Token::Kind::Ident || tok_.text != kw)
            throw ParseError(tok_.line, tok_.col, "expected '" + kw + "'" + found());
        return take();
    }

    Token expect_int() {
        if (tok_.kind != Token::Kind::Int)
            throw ParseError(tok_.line, tok_.col, "expected integer" + found());
        return take();
    }

    /// A basis-vector token e<INT>, returning the 1-based index.
    std::pair<std::size_t, Token> expect_basis_vector() {
        Token t = tok_;
        if (t.kind != Token::Kind::Ident || t.text.size() < 2 || t.text[0] != 'e')
            throw ParseError(t.line, t.col, "expected basis vector like e3" + found());
        std::size_t value = 0;
        for (std::size_t p = 1; p < t.text.size(); ++p) {
            if (!std::isdigit(static_cast<unsigned char>(t.text[p])))
                throw ParseError(t.line, t.col, "expected basis vector like e3");
            value = value * 10 + static_cast<std::size_t>(t.text[p] - '0');
        }
        take();
        return {value, t};
    }

    bool at_end() const { return tok_.kind == Token::Kind::End; }

    void expect_end() {
        if (!at_end())
            throw ParseError(tok_.line, tok_.col, "expected end of line" + found());
    }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    std::string found() const {
        if (tok_.kind == Token::Kind::End) return " (found end of line)";
        return " (found '" + tok_.text + "')";
    }

    void advance() { tok_ = lexer_.next(); }

    LineLexer lexer_;
    Token tok_;
};

inline Int parse_int(const Token& t) { return Int(t.text); }

}  // namespace dsl_detail

/// Parses the structure-constant DSL. Grammar:
///   document := header line*
///   header   := "algebra" IDENT "dim" INT NEWLINE
///   line     := "[" "e" INT "," "e" INT "]" "=" term (("+"|"-") term)* NEWLINE
///   term     := ("-")? (RATIONAL "*")? "e" INT
///   RATIONAL := INT ("/" POSINT)?
/// with "#" comments, blank lines allowed, and LF or CRLF line ends.
/// Throws ParseError carrying a 1-based source position.
inline AlgebraDocument parse_document(std::string_view text) {
    using dsl_detail::LineParser;
    using dsl_detail::Token;

    std::vector<std::pair<std::string_view, std::size_t>> lines;
    std::size_t start = 0, line_no = 1;
    for (std::size_t p = 0; p <= text.size(); ++p) {
        if (p == text.size() || text[p] == '\n') {
            std::string_view raw = text.substr(start, p - start);
            if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
            lines.emplace_back(raw, line_no);
            start = p + 1;
            ++line_no;
        }
    }

    AlgebraDocument doc;
    bool have_header = false;
    std::set<std::pair<std::size_t, std::size_t>> seen;

    for (const auto& [raw, no] : lines) {
        LineParser p(raw, no);
        if (p.at_end()) continue;  // blank or comment-only line
        if (!have_header) {
            p.expect_keyword("algebra");
            doc.name = p.expect_ident().text;
            p.expect_keyword("dim");
            Token dim_tok = p.expect_int();
            p.expect_end();
            const Int d = dsl_detail::parse_int(dim_tok);
            if (d < 1 || d > 64)
                throw ParseError(dim_tok.line, dim_tok.col,
                                 "dimension must be between 1 and 64");
            doc.dim = static_cast<std::size_t>(d);
            have_header = true;
            continue;
        }

        Token open = p.expect_symbol("[");
        auto [i, i_tok] = p.expect_basis_vector();
        p.expect_symbol(",");
        auto [j, j_tok] = p.expect_basis_vector();
        p.expect_symbol("]");
        p.expect_symbol("=");

        if (i == 0 || i > doc.dim)
            throw ParseError(i_tok.line, i_tok.col, "basis index out of range 1.." +
                                                        std::to_string(doc.dim));
        if (j == 0 || j > doc.dim)
            throw ParseError(j_tok.line, j_tok.col, "basis index out of range 1.." +
                                                        std::to_string(doc.dim));
        if (i <= j)
            throw ParseError(i_tok.line, i_tok.col,
                             "bracket lines require i > j (antisymmetry is implicit)");
        if (!seen.insert({i, j}).second)
            throw ParseError(open.line, open.col,
                             "duplicate bracket [e" + std::to_string(i) + ",e" +
                                 std::to_string(j) + "]");

        std::map<std::size_t, Rational> terms;
        bool first = true;
        while (true) {
            Rational sign(1);
            if (first) {
                if (p.peek().kind == Token::Kind::Symbol && p.peek().text == "-") {
                    p.take();
                    sign = -1;
                }
            } else {
                if (p.at_end()) break;
                if (p.peek().kind == Token::Kind::Symbol && p.peek().text == "+") {
                    p.take();
                } else if (p.peek().kind == Token::Kind::Symbol && p.peek().text == "-") {
                    p.take();
                    sign = -1;
                } else {
                    throw ParseError(p.peek().line, p.peek().col,
                                     "expected '+', '-' or end of line (found '" +
                                         p.peek().text + "')");
                }
                if (p.peek().kind == Token::Kind::Symbol && p.peek().text == "-") {
                    p.take();
                    sign = -sign;
                }
            }
            first = false;

            Rational coeff = sign;
            if (p.peek().kind == Token::Kind::Int) {
                Token num_tok = p.take();
                Int num = dsl_detail::parse_int(num_tok);
                Int den = 1;
                if (p.peek().kind == Token::Kind::Symbol && p.peek().text == "/") {
                    p.take();
                    Token den_tok = p.expect_int();
                    den = dsl_detail::parse_int(den_tok);
                    if (den < 1)
                        throw ParseError(den_tok.line, den_tok.col,
                                         "denominator must be a positive integer");
                }
                p.expect_symbol("*");
                coeff = sign * make_rational(num, den);
            }
            auto [k, k_tok] = p.expect_basis_vector();
            if (k == 0 || k > doc.dim)
                throw ParseError(k_tok.line, k_tok.col,
                                 "basis index out of range 1.." + std::to_string(doc.dim));
            auto [it, inserted] = terms.emplace(k, coeff);
            if (!inserted) it->second += coeff;
        }

        DocLine line{i, j, {}, no};
        for (const auto& [k, c] : terms)
            if (c != 0) line.terms.emplace_back(k, c);
        if (!line.terms.empty()) doc.lines.push_back(std::move(line));
    }

    if (!have_header) throw ParseError(1, 1, "expected header: algebra NAME dim N");
    std::sort(doc.lines.begin(), doc.lines.end(), [](const DocLine& a, const DocLine& b) {
        return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
    });
    return doc;
}

/// Rewrites a name as a DSL identifier (product signs become 'x', other
/// non-identifier characters become '_').
inline std::string sanitize_name(const std::string& name) {
    std::string out;
    for (std::size_t p = 0; p < name.size(); ++p) {
        const unsigned char c = name[p];
        if (std::isalnum(c) || c == '_') {
            out += static_cast<char>(c);
        } else if (c == 0xc3 && p + 1 < name.size() &&
                   static_cast<unsigned char>(name[p + 1]) == 0x97) {
            out += 'x';
            ++p;
        } else if (c == ' ') {
            if (!out.empty() && out.back() != '_') out += '_';
        } else {
            out += '_';
        }
    }
    if (out.empty()) out = "g";
    if (std::isdigit(static_cast<unsigned char>(out[0]))) out = "_" + out;
    return out;
}

namespace dsl_detail {

inline void emit_terms(std::ostringstream& os,
                       const std::vector<std::pair<std::size_t, Rational>>& terms) {
    bool first = true;
    for (const auto& [k, c] : terms) {
        const Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag.str() << "*";
        os << "e" << k;
        first = false;
    }
}

}  // namespace dsl_detail

/// Canonical emission: sorted lines, reduced rationals, single spaces, LF.
/// parse(emit(d)) == d for every valid document.
inline std::string emit_document(const AlgebraDocument& doc) {
    std::ostringstream os;
    os << "algebra " << sanitize_name(doc.name) << " dim " << doc.dim << "\n";
    for (const DocLine& line : doc.lines) {
        if (line.terms.empty()) continue;
        os << "[e" << line.i << ",e" << line.j << "] = ";
        dsl_detail::emit_terms(os, line.terms);
        os << "\n";
    }
    return os.str();
}

/// Document -> algebra, unvalidated; run validate() to get the verdict.
inline LieAlgebra algebra_from_document(const AlgebraDocument& doc) {
    std::vector<BracketLine> lines;
    for (const DocLine& l : doc.lines) {
        BracketLine b{l.i, l.j, {}};
        for (const auto& [k, c] : l.terms) b.terms.push_back({k, c});
        lines.push_back(std::move(b));
    }
    return LieAlgebra::raw_from_brackets(doc.dim, lines, doc.name);
}

/// Algebra -> canonical document over the lower triangle of its tensor.
inline AlgebraDocument document_from_algebra(const LieAlgebra& L) {
    AlgebraDocument doc;
    doc.name = sanitize_name(L.name());
    doc.dim = L.dim();
    for (std::size_t i = 2; i <= L.dim(); ++i)
        for (std::size_t j = 1; j < i; ++j) {
            DocLine line{i, j, {}, 0};
            for (std::size_t k = 1; k <= L.dim(); ++k) {
                const Rational& c = L.c(i - 1, j - 1, k - 1);
                if (c != 0) line.terms.emplace_back(k, c);
            }
            if (!line.terms.empty()) doc.lines.push_back(std::move(line));
        }
    return doc;
}

}  // namespace nilorbit
