#pragma once

#include <string>
#include <variant>

#include "thick/dsl/ast.hpp"
#include "thick/projection.hpp"

namespace thick::dsl {

namespace detail {

inline const char* kind_name(const Value& v) {
    switch (v.index()) {
        case 0: return "scalar";
        case 1: return "multiplier";
        case 2: return "thick distribution";
        case 3: return "classical distribution";
        default: return "number";
    }
}

inline Multiplier as_multiplier(const Value& v, int dim) {
    if (const auto* s = std::get_if<ScalarCoeff>(&v))
        return s->is_zero() ? Multiplier(dim) : Multiplier::homogeneous(0, SphericalSymbol::constant(dim, *s));
    return std::get<Multiplier>(v);
}

inline bool is_scalar_like(const Value& v) { return std::holds_alternative<ScalarCoeff>(v); }
inline bool is_mult_like(const Value& v) {
    return std::holds_alternative<ScalarCoeff>(v) || std::holds_alternative<Multiplier>(v);
}

inline Value add_values(const Value& a, const Value& b, int sign, int dim) {
    if (is_scalar_like(a) && is_scalar_like(b)) {
        const auto& x = std::get<ScalarCoeff>(a);
        const auto& y = std::get<ScalarCoeff>(b);
        return sign > 0 ? x + y : x - y;
    }
    if (is_mult_like(a) && is_mult_like(b)) {
        Multiplier x = as_multiplier(a, dim);
        Multiplier y = as_multiplier(b, dim);
        return sign > 0 ? x + y : x - y;
    }
    if (std::holds_alternative<ThickDistribution>(a) && std::holds_alternative<ThickDistribution>(b)) {
        const auto& x = std::get<ThickDistribution>(a);
        const auto& y = std::get<ThickDistribution>(b);
        return sign > 0 ? x + y : x - y;
    }
    if (std::holds_alternative<StandardDistribution>(a) && std::holds_alternative<StandardDistribution>(b)) {
        const auto& x = std::get<StandardDistribution>(a);
        const auto& y = std::get<StandardDistribution>(b);
        return sign > 0 ? x + y : x - y;
    }
    if (std::holds_alternative<double>(a) && std::holds_alternative<double>(b)) {
        return std::get<double>(a) + sign * std::get<double>(b);
    }
    if (std::holds_alternative<double>(a) && is_scalar_like(b)) {
        return std::get<double>(a) + sign * std::get<ScalarCoeff>(b).evaluate(dim);
    }
    if (is_scalar_like(a) && std::holds_alternative<double>(b)) {
        return std::get<ScalarCoeff>(a).evaluate(dim) + sign * std::get<double>(b);
    }
    throw EvalError(std::string("cannot add a ") + kind_name(a) + " and a " + kind_name(b));
}

inline Value scale_value(const ScalarCoeff& c, const Value& v, int dim) {
    if (is_scalar_like(v)) return c * std::get<ScalarCoeff>(v);
    if (std::holds_alternative<Multiplier>(v)) return std::get<Multiplier>(v).scaled(c);
    if (std::holds_alternative<ThickDistribution>(v)) return std::get<ThickDistribution>(v).scaled(c);
    if (std::holds_alternative<StandardDistribution>(v)) return std::get<StandardDistribution>(v).scaled(c);
    return c.evaluate(dim) * std::get<double>(v);
}

inline Value mul_values(const Value& a, const Value& b, int dim) {
    if (is_scalar_like(a)) return scale_value(std::get<ScalarCoeff>(a), b, dim);
    if (is_scalar_like(b)) return scale_value(std::get<ScalarCoeff>(b), a, dim);
    if (std::holds_alternative<Multiplier>(a) && std::holds_alternative<Multiplier>(b))
        return std::get<Multiplier>(a) * std::get<Multiplier>(b);
    if (std::holds_alternative<Multiplier>(a) && std::holds_alternative<ThickDistribution>(b))
        return multiply(std::get<Multiplier>(a), std::get<ThickDistribution>(b));
    if (std::holds_alternative<ThickDistribution>(a) && std::holds_alternative<Multiplier>(b))
        return multiply(std::get<Multiplier>(b), std::get<ThickDistribution>(a));
    if (std::holds_alternative<double>(a) && std::holds_alternative<double>(b))
        return std::get<double>(a) * std::get<double>(b);
    throw EvalError(std::string("cannot multiply a ") + kind_name(a) + " by a " + kind_name(b));
}

inline Value div_values(const Value& a, const Value& b, int dim) {
    if (is_scalar_like(b)) {
        const auto& c = std::get<ScalarCoeff>(b);
        if (c.is_zero()) throw EvalError("division by zero");
        if (!c.is_single_term()) throw EvalError("cannot divide by a multi-term coefficient");
        return scale_value(c.inverse(), a, dim);
    }
    if (is_mult_like(a) && std::holds_alternative<Multiplier>(b)) {
        auto q = try_divide(as_multiplier(a, dim), std::get<Multiplier>(b));
        if (!q) throw EvalError("cannot divide: divisor must be a single monomial that divides every term");
        return *q;
    }
    if (std::holds_alternative<double>(a) && std::holds_alternative<double>(b))
        return std::get<double>(a) / std::get<double>(b);
    throw EvalError(std::string("cannot divide a ") + kind_name(a) + " by a " + kind_name(b));
}

}  // namespace detail

/// Evaluates an expression; the result kind follows from the root node.
/// Domain violations surface as EvalError.
inline Value evaluate(const Expr& e) {
    const int dim = e->dim;
    return std::visit(
        [&](const auto& node) -> Value {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ScalarNode>) {
                return node.value;
            } else if constexpr (std::is_same_v<T, PolyNode>) {
                return node.value;
            } else if constexpr (std::is_same_v<T, PfNode>) {
                return ThickDistribution::pf(node.arg);
            } else if constexpr (std::is_same_v<T, PvNode>) {
                for (const auto& [k, psi] : node.arg.components()) {
                    if (k < -dim || (k == -dim && !sphere_moment(psi).is_zero()))
                        throw EvalError("principal value does not exist at degree " + std::to_string(k) +
                                        "; use Pf(...) for the finite-part regularization");
                }
                return StandardDistribution::function_terms(node.arg);
            } else if constexpr (std::is_same_v<T, DeltaNode>) {
                return ThickDistribution::thick_delta(node.order, node.density);
            } else if constexpr (std::is_same_v<T, ThickDeltaStarNode>) {
                return ThickDistribution::thick_delta(node.order, SphericalSymbol::one(dim));
            } else if constexpr (std::is_same_v<T, DiracNode>) {
                return StandardDistribution::dirac(dim);
            } else if constexpr (std::is_same_v<T, DeltaDerivNode>) {
                return StandardDistribution::delta_term(node.alpha, ScalarCoeff(1));
            } else if constexpr (std::is_same_v<T, SumNode>) {
                Value acc = evaluate(node.terms[0]);
                if (node.signs[0] < 0) acc = detail::mul_values(Value(ScalarCoeff(-1)), acc, dim);
                for (size_t i = 1; i < node.terms.size(); ++i)
                    acc = detail::add_values(acc, evaluate(node.terms[i]), node.signs[i], dim);
                return acc;
            } else if constexpr (std::is_same_v<T, ProductNode>) {
                Value acc = evaluate(node.factors[0]);
                if (node.invert[0]) acc = detail::div_values(Value(ScalarCoeff(1)), acc, dim);
                for (size_t i = 1; i < node.factors.size(); ++i) {
                    Value rhs = evaluate(node.factors[i]);
                    acc = node.invert[i] ? detail::div_values(acc, rhs, dim) : detail::mul_values(acc, rhs, dim);
                }
                return acc;
            } else if constexpr (std::is_same_v<T, DStarNode>) {
                Value child = evaluate(node.child);
                if (!std::holds_alternative<ThickDistribution>(child))
                    throw EvalError("dstar expects a thick distribution; wrap functions in Pf(...)");
                return thick_partial(node.axis, std::get<ThickDistribution>(child));
            } else if constexpr (std::is_same_v<T, DZeroNode>) {
                Value child = evaluate(node.child);
                if (!std::holds_alternative<ThickDistribution>(child))
                    throw EvalError("dzero expects a thick distribution; wrap functions in Pf(...)");
                const auto& t = std::get<ThickDistribution>(child);
                if (t.has_negative_order_delta())
                    throw EvalError("dzero applied to a value with a negative-order thick delta");
                return order_zero_partial(node.axis, t);
            } else if constexpr (std::is_same_v<T, ProjectNode>) {
                Value child = evaluate(node.child);
                if (!std::holds_alternative<ThickDistribution>(child))
                    throw EvalError("project expects a thick distribution");
                return project(std::get<ThickDistribution>(child));
            } else if constexpr (std::is_same_v<T, MomentNode>) {
                return sphere_moment(node.poly);
            } else {
                static_assert(std::is_same_v<T, PairNode>);
                Value child = evaluate(node.child);
                if (!std::holds_alternative<ThickDistribution>(child))
                    throw EvalError("pair expects a thick distribution");
                return dual_pairing(std::get<ThickDistribution>(child), node.probe);
            }
        },
        e->node);
}

}  // namespace thick::dsl
