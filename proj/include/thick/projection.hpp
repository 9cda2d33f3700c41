#pragma once

#include <stdexcept>

#include "thick/standard_distribution.hpp"
#include "thick/thick_distribution.hpp"

namespace thick {

/// Projection onto D'(R^n), dual of the inclusion of ordinary test
/// functions. Pf terms carry over as classified function terms. A thick
/// delta g delta*^[q] with q >= 0 becomes
///   ((-1)^q / C) sum_{|alpha|=q} <g, n^alpha> / alpha! D^alpha delta,
/// with the pairing computed by sphere_moment; negative orders project to 0.
/// Total: nothing is rejected, unprojectable mass simply keeps its Pf tag.
inline StandardDistribution project(const ThickDistribution& t) {
    const int dim = t.dim();
    StandardDistribution out(dim);
    for (const auto& [k, psi0] : t.pf_parts()) out.add_function_term(k, psi0);
    for (const auto& [q, g] : t.delta_parts()) {
        if (q < 0) continue;
        const Rational sign = (q % 2 == 0) ? Rational(1) : Rational(-1);
        for_each_multi_index(dim, q, [&](const MultiIndex& alpha) {
            ScalarCoeff pairing = sphere_moment(g * SphericalSymbol::monomial(dim, alpha));
            if (pairing.is_zero()) return;
            const Rational factor = sign / Rational(alpha.factorial_product());
            out.add_delta_term(alpha, pairing.shifted(-1) * ScalarCoeff(factor));
        });
    }
    return out;
}

/// Distributional derivative of the homogeneous function r^k psi0, computed
/// directly case by case (no thick machinery):
///   k > 1-n : the ordinary derivative, a regular distribution;
///   k = 1-n : p.v. of the ordinary derivative + A delta, A = <psi0, n_i>;
///   k < 1-n : Pf of the ordinary derivative + D, where
///             D = (-1)^(1-n-k) sum_{|alpha|=1-n-k} <n_i psi0, n^alpha>/alpha! D^alpha delta.
/// Matches project(thick_partial(i, Pf(r^k psi0))) exactly.
inline StandardDistribution standard_partial_homogeneous(int axis, int degree, const SphericalSymbol& psi0) {
    const int dim = psi0.dim();
    if (axis < 1 || axis > dim) throw std::invalid_argument("standard_partial_homogeneous: axis out of range");

    const Multiplier derivative = Multiplier::homogeneous(degree, psi0).partial(axis);
    StandardDistribution out = StandardDistribution::function_terms(derivative);

    const int q = 1 - dim - degree;  // order of the would-be boundary delta
    if (q == 0) {
        const ScalarCoeff a = sphere_moment(SphericalSymbol::coordinate(dim, axis) * psi0);
        out.add_delta_term(MultiIndex::zero(dim), a);
    } else if (q > 0) {
        const SphericalSymbol ni_psi = SphericalSymbol::coordinate(dim, axis) * psi0;
        const Rational sign = (q % 2 == 0) ? Rational(1) : Rational(-1);
        for_each_multi_index(dim, q, [&](const MultiIndex& alpha) {
            ScalarCoeff pairing = sphere_moment(ni_psi * SphericalSymbol::monomial(dim, alpha));
            if (pairing.is_zero()) return;
            const Rational factor = sign / Rational(alpha.factorial_product());
            out.add_delta_term(alpha, pairing * ScalarCoeff(factor));
        });
    }
    return out;
}

/// Term-wise distributional derivative: function terms via
/// standard_partial_homogeneous; c D^alpha delta differentiates to
/// c D^(alpha+e_i) delta. Intertwines with the thick derivative:
/// project(thick_partial(i, T)) = standard_partial(i, project(T)).
inline StandardDistribution standard_partial(int axis, const StandardDistribution& s) {
    const int dim = s.dim();
    if (axis < 1 || axis > dim) throw std::invalid_argument("standard_partial: axis out of range");
    StandardDistribution out(dim);
    for (const auto& [k, psi0] : s.function_parts()) out += standard_partial_homogeneous(axis, k, psi0);
    for (const auto& [alpha, c] : s.delta_derivatives()) out.add_delta_term(alpha.plus_unit(axis), c);
    return out;
}

/// Restriction to test functions whose expansions start at order 0:
/// drops every thick delta of negative order, keeps all Pf terms and
/// deltas of order >= 0.
inline ThickDistribution project_order_zero(const ThickDistribution& t) {
    ThickDistribution out(t.dim());
    for (const auto& [k, psi0] : t.pf_parts()) out.add_pf(k, psi0);
    for (const auto& [q, g] : t.delta_parts())
        if (q >= 0) out.add_delta(q, g);
    return out;
}

/// Derivative induced on order-0 values via the canonical (Pf) extension:
/// project_order_zero(thick_partial(axis, t)). The input must itself be a
/// valid order-0 value (no negative-order deltas).
inline ThickDistribution order_zero_partial(int axis, const ThickDistribution& t) {
    if (t.has_negative_order_delta())
        throw std::invalid_argument("order_zero_partial: input has a negative-order thick delta");
    return project_order_zero(thick_partial(axis, t));
}

}  // namespace thick
