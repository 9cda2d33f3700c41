#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "thick/dsl/ast.hpp"

namespace thick::dsl {

enum class Format { Plain, Latex, Tree };

namespace render_detail {

// Every function below is deterministic: term order is grade-descending
// (Pf before delta on ties), monomials and multi-indices follow the
// lexicographic map order, so equal values render byte-identically.

struct SignedTerm {
    bool negative = false;
    std::string body;
};

inline std::string join_signed(const std::vector<SignedTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out = terms[0].negative ? "-" + terms[0].body : terms[0].body;
    for (size_t i = 1; i < terms.size(); ++i)
        out += (terms[i].negative ? " - " : " + ") + terms[i].body;
    return out;
}

inline std::string rational_token(const Rational& q, bool latex) {
    const Integer num = numerator(q);
    const Integer den = denominator(q);
    if (den == 1) return num.str();
    const Integer mag = num < 0 ? Integer(-num) : num;
    const bool neg = num < 0;
    if (latex) {
        const std::string body = "\\frac{" + mag.str() + "}{" + den.str() + "}";
        return neg ? "-" + body : body;
    }
    const std::string body = "(" + mag.str() + "/" + den.str() + ")";
    return neg ? "-" + body : body;
}

inline std::string c_token(int power, bool latex) {
    if (power == 1) return "C";
    if (latex) return "C^{" + std::to_string(power) + "}";
    return "C^" + std::to_string(power);
}

inline std::string variable_token(int axis, int exponent, bool latex) {
    std::string base;
    if (latex) {
        base = axis >= 10 ? "n_{" + std::to_string(axis) + "}" : "n_" + std::to_string(axis);
        if (exponent != 1) base += "^{" + std::to_string(exponent) + "}";
        return base;
    }
    base = "n" + std::to_string(axis);
    if (exponent != 1) base += "^" + std::to_string(exponent);
    return base;
}

inline std::string monomial_token(const MultiIndex& a, bool latex) {
    std::string out;
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += latex ? " " : "*";
        out += variable_token(i + 1, a[i], latex);
    }
    return out;
}

/// One C-power term of a coefficient as a signed factor string; empty body
/// means the factor is 1.
inline SignedTerm coeff_term(int power, const Rational& q, bool latex) {
    SignedTerm t;
    t.negative = q < 0;
    const Rational mag = t.negative ? Rational(-q) : q;
    std::string parts;
    if (mag != 1) parts = rational_token(mag, latex);
    if (power != 0) {
        if (!parts.empty()) parts += latex ? " " : "*";
        parts += c_token(power, latex);
    }
    t.body = std::move(parts);  // empty body means the factor 1
    return t;
}

inline std::string scalar_sum(const ScalarCoeff& c, bool latex) {
    std::vector<SignedTerm> terms;
    for (const auto& [p, q] : c.terms()) {
        SignedTerm t = coeff_term(p, q, latex);
        if (t.body.empty()) t.body = "1";
        terms.push_back(std::move(t));
    }
    return join_signed(terms);
}

/// Coefficient * monomial as a signed term.
inline SignedTerm poly_term(const MultiIndex& a, const ScalarCoeff& c, bool latex) {
    const std::string mono = monomial_token(a, latex);
    if (c.is_single_term()) {
        const auto& [p, q] = *c.terms().begin();
        SignedTerm t = coeff_term(p, q, latex);
        if (!mono.empty()) {
            if (t.body.empty()) {
                t.body = mono;
            } else {
                t.body += (latex ? " " : "*") + mono;
            }
        } else if (t.body.empty()) {
            t.body = "1";
        }
        return t;
    }
    SignedTerm t;
    t.body = (latex ? "\\left(" : "(") + scalar_sum(c, latex) + (latex ? "\\right)" : ")");
    if (!mono.empty()) t.body += (latex ? " " : "*") + mono;
    return t;
}

inline std::vector<SignedTerm> poly_terms(const SphericalSymbol& p, bool latex) {
    std::vector<SignedTerm> out;
    for (const auto& [a, c] : p.monomials()) out.push_back(poly_term(a, c, latex));
    return out;
}

inline std::string poly_sum(const SphericalSymbol& p, bool latex) { return join_signed(poly_terms(p, latex)); }

/// r^degree * profile, with negative powers rendered as a quotient.
inline std::string homogeneous_token(int degree, const SphericalSymbol& profile, bool latex) {
    const bool multi = profile.monomials().size() > 1;
    std::string num = poly_sum(profile, latex);
    if (degree == 0) return num;
    if (latex) {
        if (degree < 0) {
            const std::string r = degree == -1 ? "r" : "r^{" + std::to_string(-degree) + "}";
            return "\\frac{" + num + "}{" + r + "}";
        }
        if (multi) num = "\\left(" + num + "\\right)";
        return num + " r^{" + std::to_string(degree) + "}";
    }
    if (multi) num = "(" + num + ")";
    if (degree < 0) {
        const std::string r = degree == -1 ? "r" : "r^" + std::to_string(-degree);
        return num + "/" + r;
    }
    const std::string r = degree == 1 ? "r" : "r^" + std::to_string(degree);
    if (num == "1") return r;
    return num + "*" + r;
}

inline std::string multiplier_sum(const Multiplier& m, bool latex) {
    std::vector<SignedTerm> terms;
    // grade-descending to match the distribution renderers
    for (auto it = m.components().rbegin(); it != m.components().rend(); ++it)
        terms.push_back({false, homogeneous_token(it->first, it->second, latex)});
    return join_signed(terms);
}

inline std::string thick_delta_token(int order, bool latex) {
    if (latex) return order == 0 ? "\\delta_\\ast" : "\\delta_\\ast^{[" + std::to_string(order) + "]}";
    return order == 0 ? "delta*" : "delta*[" + std::to_string(order) + "]";
}

/// density * delta*[q]; single-monomial densities get their sign lifted out.
inline SignedTerm thick_delta_term(int order, const SphericalSymbol& density, bool latex) {
    const std::string suffix = thick_delta_token(order, latex);
    const bool constant_one = density.monomials().size() == 1 &&
                              density.monomials().begin()->first.order() == 0 &&
                              density.monomials().begin()->second == ScalarCoeff(1);
    if (constant_one) return {false, suffix};
    SignedTerm t;
    if (density.monomials().size() == 1) {
        t = poly_term(density.monomials().begin()->first, density.monomials().begin()->second, latex);
        if (t.body == "1") t.body = suffix;
        else t.body += (latex ? " " : "*") + suffix;
        return t;
    }
    t.body = (latex ? "\\left(" : "(") + poly_sum(density, latex) + (latex ? "\\right)" : ")") +
             (latex ? " " : "*") + suffix;
    return t;
}

inline std::string thick_sum(const ThickDistribution& t, bool latex) {
    // order terms by grade descending; Pf before delta on equal grade
    struct Entry {
        int grade;
        int species;  // 0 = Pf, 1 = delta
        int key;
    };
    std::vector<Entry> order;
    for (const auto& [k, psi] : t.pf_parts()) order.push_back({k, 0, k});
    for (const auto& [q, g] : t.delta_parts()) order.push_back({-t.dim() - q, 1, q});
    std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
        if (a.grade != b.grade) return a.grade > b.grade;
        if (a.species != b.species) return a.species < b.species;
        return a.key < b.key;
    });
    std::vector<SignedTerm> terms;
    for (const Entry& e : order) {
        if (e.species == 0) {
            const std::string inner = homogeneous_token(e.key, t.pf_profile(e.key), latex);
            terms.push_back({false, latex ? "\\mathcal{P}f\\left(" + inner + "\\right)" : "Pf(" + inner + ")"});
        } else {
            terms.push_back(thick_delta_term(e.key, t.delta_density(e.key), latex));
        }
    }
    return join_signed(terms);
}

inline std::string dirac_token(bool latex) { return latex ? "\\delta(\\mathbf{x})" : "delta"; }

inline std::string delta_derivative_token(const MultiIndex& alpha, bool latex) {
    if (alpha.order() == 0) return dirac_token(latex);
    std::string idx;
    for (int i = 0; i < alpha.dim(); ++i) {
        if (i) idx += ",";
        idx += std::to_string(alpha[i]);
    }
    if (latex) return "D^{(" + idx + ")}\\delta(\\mathbf{x})";
    return "D[" + idx + "]delta";
}

inline std::string standard_sum(const StandardDistribution& s, bool latex) {
    std::vector<SignedTerm> terms;
    for (auto it = s.function_parts().rbegin(); it != s.function_parts().rend(); ++it) {
        const std::string inner = homogeneous_token(it->first, it->second, latex);
        switch (classify_function_term(it->first, it->second)) {
            case FunctionTermKind::Regular:
                terms.push_back({false, inner});
                break;
            case FunctionTermKind::PrincipalValue:
                terms.push_back({false, latex ? "\\mathrm{p.v.}\\left(" + inner + "\\right)"
                                              : "pv(" + inner + ")"});
                break;
            case FunctionTermKind::FinitePart:
                terms.push_back(
                    {false, latex ? "\\mathcal{P}f\\left(" + inner + "\\right)" : "Pf(" + inner + ")"});
                break;
        }
    }
    for (const auto& [alpha, c] : s.delta_derivatives()) {
        const std::string tail = delta_derivative_token(alpha, latex);
        if (c == ScalarCoeff(1)) {
            terms.push_back({false, tail});
            continue;
        }
        SignedTerm t = poly_term(MultiIndex::zero(s.dim()), c, latex);
        if (t.body == "1") t.body = tail;
        else t.body += (latex ? " " : "*") + tail;
        terms.push_back(t);
    }
    return join_signed(terms);
}

inline std::string real_token(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace render_detail

/// Plain and LaTeX rendering; the tree format lives in tree.hpp.
inline std::string render_text(const Value& v, Format format) {
    const bool latex = format == Format::Latex;
    using namespace render_detail;
    if (const auto* c = std::get_if<ScalarCoeff>(&v)) {
        if (c->is_zero()) return "0";
        return join_signed({poly_term(MultiIndex::zero(2), *c, latex)});
    }
    if (const auto* m = std::get_if<Multiplier>(&v)) {
        if (m->is_zero()) return "0";
        return multiplier_sum(*m, latex);
    }
    if (const auto* t = std::get_if<ThickDistribution>(&v)) {
        if (t->is_zero()) return "0";
        return thick_sum(*t, latex);
    }
    if (const auto* s = std::get_if<StandardDistribution>(&v)) {
        if (s->is_zero()) return "0";
        return standard_sum(*s, latex);
    }
    return real_token(std::get<double>(v));
}

}  // namespace thick::dsl
