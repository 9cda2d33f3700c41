#pragma once

#include <cctype>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "thick/dsl/ast.hpp"

namespace thick::dsl {

// Surface grammar (the accepted language is a superset closed under the
// renderer's output):
//   expr    := ['-'] prod (('+'|'-') prod)*
//   prod    := factor (('*'|'/') factor)*
//   factor  := int | 'C' ['^' int] | 'r' ['^' int] | nK ['^' nat]
//            | 'Pf' '(' hom ')' | 'pv' '(' hom ')'
//            | 'delta' '[' int ']' '(' poly ')' | 'delta'
//            | 'delta*' ['[' int ']'] | 'D' '[' nat {',' nat} ']' 'delta'
//            | ('dstar'|'dzero') '(' int ',' expr ')'
//            | 'project' '(' expr ')' | 'moment' '(' poly ')'
//            | 'pair' '(' expr ',' test ')' | '(' expr ')' | '-' factor
//   hom     := arithmetic over ints, 'C', 'r', n1..nD with *, /, ^, +, -,
//              reduced at parse time to a finite sum of r^k psi0(n)
//   poly    := hom with a single component of degree 0
//   test    := [hom '*'] 'gauss'

namespace detail {

enum class TokKind { Int, Ident, DeltaStar, Punct, End };

struct Token {
    TokKind kind;
    std::string text;
    char punct = 0;
    SourcePos pos;
};

inline std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    SourcePos pos;
    size_t i = 0;
    const auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const SourcePos start = pos;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({TokKind::Int, std::string(text.substr(i, j - i)), 0, start});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            std::string word(text.substr(i, j - i));
            advance(j - i);
            // "delta" immediately followed by '*' is the thick-delta marker
            if (word == "delta" && i < text.size() && text[i] == '*') {
                advance(1);
                out.push_back({TokKind::DeltaStar, "delta*", 0, start});
            } else {
                out.push_back({TokKind::Ident, std::move(word), 0, start});
            }
            continue;
        }
        if (std::string_view("+-*/^()[],").find(c) != std::string_view::npos) {
            out.push_back({TokKind::Punct, std::string(1, c), c, start});
            advance(1);
            continue;
        }
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({TokKind::End, "", 0, pos});
    return out;
}

}  // namespace detail

class Parser {
public:
    Parser(std::string_view text, int dim) : dim_(dim), tokens_(detail::lex(text)) {
        if (dim < 2) throw std::invalid_argument("Parser: dim must be >= 2");
    }

    Expr parse_expression() {
        Expr e = parse_sum();
        if (!at_end()) throw ParseError(peek().pos, "unexpected trailing input");
        return e;
    }

private:
    using Token = detail::Token;
    using TokKind = detail::TokKind;

    // ---- token plumbing -------------------------------------------------

    const Token& peek(size_t ahead = 0) const {
        const size_t i = std::min(idx_ + ahead, tokens_.size() - 1);
        return tokens_[std::min(i, limit_)];
    }

    const Token& next() {
        const Token& t = peek();
        if (idx_ < limit_ && t.kind != TokKind::End) ++idx_;
        return t;
    }

    bool at_end() const { return idx_ >= limit_ || tokens_[idx_].kind == TokKind::End; }

    bool at_punct(char c) const { return !at_end() && peek().kind == TokKind::Punct && peek().punct == c; }

    bool at_ident(std::string_view word) const {
        return !at_end() && peek().kind == TokKind::Ident && peek().text == word;
    }

    void expect_punct(char c, const char* what) {
        if (!at_punct(c)) throw ParseError(peek().pos, std::string("expected '") + c + "' " + what);
        next();
    }

    int parse_int(const char* what) {
        int sign = 1;
        if (at_punct('-')) {
            next();
            sign = -1;
        } else if (at_punct('+')) {
            next();
        }
        if (at_end() || peek().kind != TokKind::Int)
            throw ParseError(peek().pos, std::string("expected an integer ") + what);
        const Token& t = next();
        if (t.text.size() > 9) throw ParseError(t.pos, "integer too large here");
        return sign * std::stoi(t.text);
    }

    /// Coordinate index for identifiers of the form n<digits>; 0 otherwise.
    int coordinate_axis(const Token& t) const {
        if (t.kind != TokKind::Ident || t.text.size() < 2 || t.text.size() > 4 || t.text[0] != 'n') return 0;
        for (size_t i = 1; i < t.text.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) return 0;
        return std::stoi(t.text.substr(1));
    }

    /// Bounded integer for exponents and orders; keeps pathological inputs
    /// from exploding downstream expansions.
    int parse_small_int(const char* what, int bound = 64) {
        const SourcePos pos = peek().pos;
        const int v = parse_int(what);
        if (v > bound || v < -bound)
            throw ParseError(pos, std::string("magnitude of ") + what + " is limited to " + std::to_string(bound));
        return v;
    }

    // ---- the hom / poly sub-language ------------------------------------

    Multiplier parse_hom() {
        Multiplier acc(dim_);
        int sign = 1;
        if (at_punct('-')) {
            next();
            sign = -1;
        } else if (at_punct('+')) {
            next();
        }
        acc += apply_sign(parse_hom_product(), sign);
        while (at_punct('+') || at_punct('-')) {
            const int s = next().punct == '+' ? 1 : -1;
            acc += apply_sign(parse_hom_product(), s);
        }
        return acc;
    }

    static Multiplier apply_sign(Multiplier m, int sign) { return sign > 0 ? m : -m; }

    Multiplier parse_hom_product() {
        Multiplier acc = parse_hom_factor();
        while (at_punct('*') || at_punct('/')) {
            const Token& op = next();
            Multiplier rhs = parse_hom_factor();
            if (op.punct == '*') {
                acc *= rhs;
            } else {
                auto q = try_divide(acc, rhs);
                if (!q)
                    throw ParseError(op.pos, "cannot divide: divisor must be a single monomial in r and n that divides every term");
                acc = *q;
            }
        }
        return acc;
    }

    Multiplier parse_hom_factor() {
        const Token& t = peek();
        Multiplier base(dim_);
        if (t.kind == TokKind::Int) {
            next();
            base = Multiplier::homogeneous(0, SphericalSymbol::constant(dim_, ScalarCoeff(Rational(Integer(t.text)))));
            return parse_hom_power(base, t.pos);
        }
        if (t.kind == TokKind::Ident && t.text == "C") {
            next();
            int e = 1;
            if (at_punct('^')) {
                next();
                e = parse_small_int("exponent");
            }
            return Multiplier::homogeneous(0, SphericalSymbol::constant(dim_, ScalarCoeff::c_power(e)));
        }
        if (t.kind == TokKind::Ident && t.text == "r") {
            next();
            int e = 1;
            if (at_punct('^')) {
                next();
                e = parse_small_int("exponent");
            }
            return Multiplier::homogeneous(e, SphericalSymbol::one(dim_));
        }
        if (const int axis = coordinate_axis(t); axis != 0) {
            next();
            if (axis > dim_)
                throw ParseError(t.pos, "axis " + std::to_string(axis) + " out of range (dim " +
                                            std::to_string(dim_) + ")");
            int e = 1;
            if (at_punct('^')) {
                next();
                e = parse_small_int("exponent");
                if (e < 0) throw ParseError(t.pos, "negative power of a coordinate is not polynomial");
            }
            SphericalSymbol p = SphericalSymbol::one(dim_);
            for (int k = 0; k < e; ++k) p *= SphericalSymbol::coordinate(dim_, axis);
            return Multiplier::homogeneous(0, p);
        }
        if (at_punct('(')) {
            next();
            Multiplier inner = parse_hom();
            expect_punct(')', "to close the group");
            return parse_hom_power(inner, t.pos);
        }
        if (at_punct('-')) {
            next();
            return -parse_hom_factor();
        }
        throw ParseError(t.pos, t.kind == TokKind::End
                                    ? "unexpected end of input in homogeneous expression"
                                    : "expected a homogeneous expression in r and n1..n" + std::to_string(dim_));
    }

    Multiplier parse_hom_power(const Multiplier& base, SourcePos pos) {
        if (!at_punct('^')) return base;
        next();
        const int e = parse_small_int("exponent");
        Multiplier acc = Multiplier::one(dim_);
        for (int k = 0; k < std::abs(e); ++k) acc *= base;
        if (e >= 0) return acc;
        auto inv = try_divide(Multiplier::one(dim_), acc);
        if (!inv) throw ParseError(pos, "cannot invert this expression");
        return *inv;
    }

    SphericalSymbol parse_poly(const char* what) {
        const SourcePos pos = peek().pos;
        Multiplier m = parse_hom();
        if (m.is_zero()) return SphericalSymbol(dim_);
        if (m.components().size() != 1 || m.components().begin()->first != 0)
            throw ParseError(pos, std::string("expected a polynomial in n1..n") + std::to_string(dim_) +
                                      " (no r powers) " + what);
        return m.components().begin()->second;
    }

    TestFunction parse_test() {
        // locate the trailing 'gauss' at the current nesting level
        size_t depth = 0;
        size_t gauss_at = std::numeric_limits<size_t>::max();
        for (size_t i = idx_; i < tokens_.size() && i < limit_; ++i) {
            const Token& t = tokens_[i];
            if (t.kind == TokKind::Punct && t.punct == '(') ++depth;
            if (t.kind == TokKind::Punct && t.punct == ')') {
                if (depth == 0) break;
                --depth;
            }
            if (t.kind == TokKind::Punct && t.punct == ',' && depth == 0) break;
            if (t.kind == TokKind::Ident && t.text == "gauss" && depth == 0) {
                gauss_at = i;
                break;
            }
        }
        if (gauss_at == std::numeric_limits<size_t>::max())
            throw ParseError(peek().pos, "expected a test function ending in 'gauss'");

        Multiplier poly = Multiplier::one(dim_);
        if (gauss_at > idx_) {
            // everything before the '*' that precedes gauss is a hom expression
            const Token& sep = tokens_[gauss_at - 1];
            if (gauss_at == idx_ + 1 || sep.kind != TokKind::Punct || sep.punct != '*')
                throw ParseError(sep.pos, "expected '*' before 'gauss'");
            const size_t saved_limit = limit_;
            limit_ = gauss_at - 1;
            poly = parse_hom();
            if (!at_end()) throw ParseError(peek().pos, "unexpected token in test function");
            limit_ = saved_limit;
            idx_ = gauss_at - 1;
            next();  // '*'
        }
        next();  // gauss

        TestFunction out(dim_);
        for (const auto& [m, profile] : poly.components()) {
            for (const auto& [a, c] : profile.monomials()) {
                if (!c.is_rational())
                    throw ParseError(peek().pos, "the symbol C cannot appear in a test function");
                out.add_term(c.coeff(0), a, m);
            }
        }
        return out;
    }

    // ---- general expressions --------------------------------------------

    Expr parse_sum() {
        const SourcePos pos = peek().pos;
        std::vector<Expr> terms;
        std::vector<int> signs;
        int sign = 1;
        if (at_punct('-')) {
            next();
            sign = -1;
        } else if (at_punct('+')) {
            next();
        }
        terms.push_back(parse_product());
        signs.push_back(sign);
        while (at_punct('+') || at_punct('-')) {
            signs.push_back(next().punct == '+' ? 1 : -1);
            terms.push_back(parse_product());
        }
        if (terms.size() == 1 && signs[0] == 1) return terms[0];
        return make_expr(dim_, pos, SumNode{std::move(terms), std::move(signs)});
    }

    Expr parse_product() {
        const SourcePos pos = peek().pos;
        std::vector<Expr> factors;
        std::vector<bool> invert;
        factors.push_back(parse_factor());
        invert.push_back(false);
        while (at_punct('*') || at_punct('/')) {
            invert.push_back(next().punct == '/');
            factors.push_back(parse_factor());
        }
        if (factors.size() == 1) return factors[0];
        return make_expr(dim_, pos, ProductNode{std::move(factors), std::move(invert)});
    }

    Expr parse_factor() {
        const Token& t = peek();
        const SourcePos pos = t.pos;
        if (t.kind == TokKind::Int) {
            next();
            return make_expr(dim_, pos, ScalarNode{ScalarCoeff(Rational(Integer(t.text)))});
        }
        if (t.kind == TokKind::DeltaStar) {
            next();
            int order = 0;
            if (at_punct('[')) {
                next();
                order = parse_small_int("thick delta order");
                expect_punct(']', "after the thick delta order");
            }
            return make_expr(dim_, pos, ThickDeltaStarNode{order});
        }
        if (t.kind == TokKind::Ident) {
            const std::string& word = t.text;
            if (word == "C" || word == "r" || coordinate_axis(t) != 0) {
                Multiplier m = parse_hom_factor();
                if (m.components().size() == 1 && m.components().begin()->first == 0 &&
                    m.components().begin()->second.monomials().size() == 1 &&
                    m.components().begin()->second.monomials().begin()->first.order() == 0) {
                    return make_expr(dim_, pos,
                                     ScalarNode{m.components().begin()->second.monomials().begin()->second});
                }
                return make_expr(dim_, pos, PolyNode{std::move(m)});
            }
            if (word == "Pf" || word == "pv") {
                next();
                expect_punct('(', "after the regularization name");
                Multiplier arg = parse_hom();
                expect_punct(')', "to close the argument");
                if (word == "Pf") return make_expr(dim_, pos, PfNode{std::move(arg)});
                return make_expr(dim_, pos, PvNode{std::move(arg)});
            }
            if (word == "delta") {
                next();
                if (at_punct('[')) {
                    next();
                    const int order = parse_small_int("thick delta order");
                    expect_punct(']', "after the thick delta order");
                    expect_punct('(', "before the density");
                    SphericalSymbol density = parse_poly("as a density");
                    expect_punct(')', "to close the density");
                    return make_expr(dim_, pos, DeltaNode{order, std::move(density)});
                }
                return make_expr(dim_, pos, DiracNode{});
            }
            if (word == "D") {
                next();
                expect_punct('[', "after D");
                std::vector<int> alpha;
                alpha.push_back(parse_small_int("derivative order"));
                while (at_punct(',')) {
                    next();
                    alpha.push_back(parse_small_int("derivative order"));
                }
                expect_punct(']', "after the derivative orders");
                if (!at_ident("delta")) throw ParseError(peek().pos, "expected 'delta' after D[...]");
                next();
                if (static_cast<int>(alpha.size()) != dim_)
                    throw ParseError(pos, "D[...] needs exactly " + std::to_string(dim_) + " entries");
                for (int e : alpha)
                    if (e < 0) throw ParseError(pos, "derivative orders must be non-negative");
                return make_expr(dim_, pos, DeltaDerivNode{MultiIndex(std::move(alpha))});
            }
            if (word == "dstar" || word == "dzero") {
                next();
                expect_punct('(', "after the derivative name");
                const SourcePos axis_pos = peek().pos;
                const int axis = parse_int("axis");
                if (axis < 1 || axis > dim_)
                    throw ParseError(axis_pos, "axis " + std::to_string(axis) + " out of range (dim " +
                                                   std::to_string(dim_) + ")");
                expect_punct(',', "between axis and argument");
                Expr child = parse_sum();
                expect_punct(')', "to close the derivative");
                if (word == "dstar") return make_expr(dim_, pos, DStarNode{axis, std::move(child)});
                return make_expr(dim_, pos, DZeroNode{axis, std::move(child)});
            }
            if (word == "project") {
                next();
                expect_punct('(', "after project");
                Expr child = parse_sum();
                expect_punct(')', "to close project");
                return make_expr(dim_, pos, ProjectNode{std::move(child)});
            }
            if (word == "moment") {
                next();
                expect_punct('(', "after moment");
                SphericalSymbol poly = parse_poly("as a moment argument");
                expect_punct(')', "to close moment");
                return make_expr(dim_, pos, MomentNode{std::move(poly)});
            }
            if (word == "pair") {
                next();
                expect_punct('(', "after pair");
                Expr child = parse_sum();
                expect_punct(',', "between the distribution and the test function");
                TestFunction probe = parse_test();
                expect_punct(')', "to close pair");
                return make_expr(dim_, pos, PairNode{std::move(child), std::move(probe)});
            }
            throw ParseError(pos, "unknown identifier '" + word + "'");
        }
        if (at_punct('(')) {
            next();
            Expr inner = parse_sum();
            expect_punct(')', "to close the group");
            return inner;
        }
        if (at_punct('-')) {
            next();
            Expr inner = parse_factor();
            return make_expr(dim_, pos,
                             ProductNode{{make_expr(dim_, pos, ScalarNode{ScalarCoeff(-1)}), std::move(inner)},
                                         {false, false}});
        }
        throw ParseError(pos, t.kind == TokKind::End ? "unexpected end of input" : "expected an expression");
    }

    int dim_;
    std::vector<Token> tokens_;
    size_t idx_ = 0;
    size_t limit_ = std::numeric_limits<size_t>::max();
};

/// Parses one expression; the whole input must be consumed.
inline Expr parse(std::string_view text, int dim) { return Parser(text, dim).parse_expression(); }

}  // namespace thick::dsl
