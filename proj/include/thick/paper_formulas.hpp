#pragma once

#include <stdexcept>
#include <vector>

#include "thick/projection.hpp"

namespace thick {

// Named point-source and second-derivative identities in R^3 (plus the
// general-dim second derivative of Pf(1)). These are thin orchestrations
// over the thick calculus, exposed so that tests and the CLI can call the
// classical results by name.

namespace detail {

inline SphericalSymbol index_product(const std::vector<int>& indices, int dim) {
    SphericalSymbol p = SphericalSymbol::one(dim);
    for (int j : indices) {
        if (j < 1 || j > dim) throw std::invalid_argument("index out of range");
        p *= SphericalSymbol::coordinate(dim, j);
    }
    return p;
}

}  // namespace detail

/// Thick derivative of Pf(n_j1 ... n_jk / r^2) in R^3 computed by the
/// product rule: the first k-1 factors act as a degree-0 multiplier on
/// Pf(n_jk / r^2). The base-case k = 1 is a direct thick_partial.
inline ThickDistribution bowen_thick(const std::vector<int>& indices, int axis) {
    constexpr int dim = 3;
    if (indices.empty()) throw std::invalid_argument("bowen_thick: need at least one index");
    const ThickDistribution base =
        ThickDistribution::pf(-2, SphericalSymbol::coordinate(dim, indices.back()));
    if (indices.size() == 1) return thick_partial(axis, base);

    std::vector<int> head(indices.begin(), indices.end() - 1);
    const Multiplier m = Multiplier::homogeneous(0, detail::index_product(head, dim));
    return multiply(m.partial(axis), base) + multiply(m, thick_partial(axis, base));
}

/// Distributional derivative of the point-source field n_j1 ... n_jk / r^2
/// in R^3. Computed two ways — directly from the homogeneous-derivative
/// theorem, and through the thick product rule followed by projection —
/// and checked for exact agreement.
inline StandardDistribution bowen_derivative(const std::vector<int>& indices, int axis) {
    constexpr int dim = 3;
    const StandardDistribution direct =
        standard_partial_homogeneous(axis, -2, detail::index_product(indices, dim));
    const StandardDistribution via_thick = project(bowen_thick(indices, axis));
    if (!(direct == via_thick))
        throw std::logic_error("bowen_derivative: product-rule route disagrees with direct route");
    return direct;
}

/// The invalid projected product rule for k = 3: multiplies the classical
/// derivative of one factor by the remaining pair, replaces the ill-defined
/// density-times-delta product by the projection of the corresponding thick
/// delta, and symmetrizes over which factor is pulled out. Returns the
/// WRONG value (delta coefficient (1/27)C per Kronecker pattern instead of
/// (1/15)C); the function-term part coincides with the correct result.
inline StandardDistribution bowen_naive(int j1, int j2, int j3, int axis) {
    constexpr int dim = 3;
    const std::vector<int> js{j1, j2, j3};
    for (int j : js)
        if (j < 1 || j > dim) throw std::invalid_argument("bowen_naive: index out of range");

    const SphericalSymbol ni = SphericalSymbol::coordinate(dim, axis);

    // Function part from the grouping (j1 j2) * (j3/r^2); any grouping gives
    // the same profile.
    const Multiplier pair01 = Multiplier::homogeneous(0, detail::index_product({j1, j2}, dim));
    const StandardDistribution single =
        standard_partial_homogeneous(axis, -2, SphericalSymbol::coordinate(dim, j3));
    StandardDistribution out = StandardDistribution::function_terms(
        pair01 * Multiplier::homogeneous(-3, single.function_profile(-3)) +
        pair01.partial(axis) * Multiplier::homogeneous(-2, SphericalSymbol::coordinate(dim, j3)));

    // Averaged source term: each choice of pulled-out factor contributes
    // A_c * Pi(n_a n_b delta*), A_c = <n_i n_jc> the single-factor delta
    // coefficient.
    ScalarCoeff src_sym;
    for (int c = 0; c < 3; ++c) {
        const int jc = js[c];
        const int ja = js[(c + 1) % 3];
        const int jb = js[(c + 2) % 3];
        const ScalarCoeff a_c = sphere_moment(ni * SphericalSymbol::coordinate(dim, jc));
        const ScalarCoeff projected_pair =
            sphere_moment(SphericalSymbol::coordinate(dim, ja) * SphericalSymbol::coordinate(dim, jb))
                .shifted(-1);
        src_sym += a_c * projected_pair;
    }
    out.add_delta_term(MultiIndex::zero(dim), src_sym * ScalarCoeff(Rational(1, 3)));
    return out;
}

/// d*_i d*_j Pf(1/r) in R^3: (3 x_i x_j - delta_ij r^2) Pf(r^-5)
/// + C (delta_ij - 4 n_i n_j) delta*.
inline ThickDistribution inverse_r_second_thick(int i, int j) {
    constexpr int dim = 3;
    return thick_partial(i, thick_partial(j, ThickDistribution::pf(-1, SphericalSymbol::one(dim))));
}

/// Frahm's formula: the distributional second derivative of 1/r in R^3,
/// p.v.((3 x_i x_j - r^2 delta_ij)/r^5) - (1/3) C delta_ij delta.
inline StandardDistribution frahm(int i, int j) {
    return project(inverse_r_second_thick(i, j));
}

/// Trace of Frahm's formula: Laplacian of 1/r, equal to -C delta = -4 pi delta;
/// the p.v. profile cancels identically.
inline StandardDistribution laplacian_inverse_r() {
    StandardDistribution out(3);
    for (int i = 1; i <= 3; ++i) out += frahm(i, i);
    return out;
}

/// d*_i d*_j Pf(1) in R^dim: C (delta_ij - 2 n_i n_j) delta*^[2-dim].
inline ThickDistribution pf_one_second_thick(int dim, int i, int j) {
    return thick_partial(i, thick_partial(j, ThickDistribution::pf_one(dim)));
}

/// Order-0 restriction of the full thick second derivative of 1/r in R^3:
/// Pf((3 x_i x_j - r^2 delta_ij)/r^5) + C (delta_ij - 4 n_i n_j) delta*.
inline ThickDistribution inverse_r_order0_projected(int i, int j) {
    return project_order_zero(inverse_r_second_thick(i, j));
}

/// Composition of two order-0 derivatives of 1/r in R^3:
/// Pf((3 x_i x_j - r^2 delta_ij)/r^5) - C n_i n_j delta*. Differs from the
/// order-0 restriction of the composed thick derivative, although both
/// project to the same classical distribution.
inline ThickDistribution inverse_r_order0_composed(int i, int j) {
    constexpr int dim = 3;
    return order_zero_partial(i, order_zero_partial(j, ThickDistribution::pf(-1, SphericalSymbol::one(dim))));
}

}  // namespace thick
