#pragma once

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <span>
#include <vector>

#include "thick/multi_index.hpp"

namespace thick {

/// One node of a product-angle quadrature grid on the unit sphere.
struct SphereNode {
    std::vector<double> x;
    double w;
};

namespace detail {

inline constexpr int kThetaPoints = 64;  // trapezoid nodes on the circle
inline constexpr unsigned kPolarPoints = 48;  // Gauss-Legendre nodes per polar angle

/// Full Gauss-Legendre rule on [0, pi] (boost stores the non-negative half).
inline std::vector<std::pair<double, double>> polar_rule() {
    using rule = boost::math::quadrature::gauss<double, kPolarPoints>;
    std::vector<std::pair<double, double>> out;
    const auto& xs = rule::abscissa();
    const auto& ws = rule::weights();
    const double half_pi = std::numbers::pi / 2.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        // map [-1,1] -> [0,pi]
        out.emplace_back(half_pi * (1.0 + xs[i]), half_pi * ws[i]);
        if (xs[i] != 0.0) out.emplace_back(half_pi * (1.0 - xs[i]), half_pi * ws[i]);
    }
    return out;
}

inline std::vector<SphereNode> build_sphere_grid(int dim) {
    if (dim == 2) {
        std::vector<SphereNode> nodes;
        nodes.reserve(kThetaPoints);
        const double step = 2.0 * std::numbers::pi / kThetaPoints;
        for (int k = 0; k < kThetaPoints; ++k) {
            const double t = step * k;
            nodes.push_back({{std::cos(t), std::sin(t)}, step});
        }
        return nodes;
    }
    // S^(d-1) as (sin(phi) * omega, cos(phi)) with omega on S^(d-2),
    // carrying the sin^(d-2)(phi) surface factor.
    const std::vector<SphereNode> inner = build_sphere_grid(dim - 1);
    std::vector<SphereNode> nodes;
    for (const auto& [phi, wphi] : polar_rule()) {
        const double s = std::sin(phi);
        const double c = std::cos(phi);
        const double factor = wphi * std::pow(s, dim - 2);
        for (const SphereNode& node : inner) {
            SphereNode out;
            out.x.reserve(dim);
            for (double xi : node.x) out.x.push_back(s * xi);
            out.x.push_back(c);
            out.w = factor * node.w;
            nodes.push_back(std::move(out));
        }
    }
    return nodes;
}

}  // namespace detail

/// Cached product-angle grid for S^(dim-1); safe for concurrent readers.
inline const std::vector<SphereNode>& sphere_grid(int dim) {
    static std::mutex mutex;
    static std::map<int, std::vector<SphereNode>> grids;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = grids.find(dim);
    if (it == grids.end()) it = grids.emplace(dim, detail::build_sphere_grid(dim)).first;
    return it->second;
}

inline double sphere_integrate(int dim, const std::function<double(std::span<const double>)>& f) {
    double total = 0.0;
    for (const SphereNode& node : sphere_grid(dim)) total += node.w * f(node.x);
    return total;
}

/// Numerical int_S n^a dsigma by product-angle quadrature; the independent
/// cross-check for the exact moment formula.
inline double monomial_sphere_moment_numeric(const MultiIndex& a, int dim) {
    double total = 0.0;
    for (const SphereNode& node : sphere_grid(dim)) {
        double v = node.w;
        for (int i = 0; i < dim; ++i)
            for (int e = 0; e < a[i]; ++e) v *= node.x[i];
        total += v;
    }
    return total;
}

/// Composite fixed-order Gauss-Legendre on [a, b].
inline double integrate_smooth(const std::function<double(double)>& f, double a, double b, int panels = 1) {
    using rule = boost::math::quadrature::gauss<double, 64>;
    double total = 0.0;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) total += rule::integrate(f, a + p * h, a + (p + 1) * h);
    return total;
}

}  // namespace thick
