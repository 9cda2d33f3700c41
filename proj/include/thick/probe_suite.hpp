#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "thick/oracle.hpp"
#include "thick/quadrature.hpp"

namespace thick {

/// Outcome of one verification sweep.
struct ProbeReport {
    int total = 0;
    int passed = 0;
    double max_error = 0.0;

    bool ok() const { return passed == total; }
};

/// Draws the randomized probe family: thick distributions with Pf degrees
/// in [-5,2] and polynomial densities of degree <= 3, test functions with
/// |a| <= 3 and m in [-2,3]. All draws reduce raw mt19937_64 output, so a
/// seed pins the stream on every platform.
class ProbeGenerator {
public:
    explicit ProbeGenerator(std::uint64_t seed) : engine_(seed) {}

    int pick(int lo, int hi) {
        return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational() {
        int num = pick(-9, 9);
        if (num == 0) num = 1;
        return Rational(num, pick(1, 6));
    }

    MultiIndex multi_index(int dim, int max_order) {
        std::vector<int> e(dim, 0);
        const int order = pick(0, max_order);
        for (int t = 0; t < order; ++t) ++e[static_cast<size_t>(pick(0, dim - 1))];
        return MultiIndex(e);
    }

    SphericalSymbol symbol(int dim, int max_degree) {
        SphericalSymbol s(dim);
        const int terms = pick(1, 3);
        for (int t = 0; t < terms; ++t) s.add_monomial(multi_index(dim, max_degree), ScalarCoeff(rational()));
        return s;
    }

    ThickDistribution thick(int dim) {
        ThickDistribution t(dim);
        const int pf_terms = pick(1, 2);
        for (int i = 0; i < pf_terms; ++i) t.add_pf(pick(-5, 2), symbol(dim, 3));
        const int delta_terms = pick(0, 2);
        for (int i = 0; i < delta_terms; ++i) t.add_delta(pick(-2, 3), symbol(dim, 3));
        return t;
    }

    TestFunction test_function(int dim) {
        TestFunction f(dim);
        const int gens = pick(1, 3);
        for (int g = 0; g < gens; ++g) f.add_term(rational(), multi_index(dim, 3), pick(-2, 3));
        if (f.is_zero()) f.add_term(Rational(1), MultiIndex::zero(dim), 0);
        return f;
    }

private:
    std::mt19937_64 engine_;
};

/// Radial finite parts against Gamma((s+1)/2)/2 for s = 0..s_max.
inline ProbeReport radial_table_check(int s_max = 10, double tol = 1e-12) {
    ProbeReport r;
    for (int s = 0; s <= s_max; ++s) {
        const double err = std::abs(radial_finite_part(s) - std::tgamma((s + 1) / 2.0) / 2.0);
        r.max_error = std::max(r.max_error, err);
        ++r.total;
        if (err <= tol) ++r.passed;
    }
    return r;
}

/// Exact monomial moments against product-angle quadrature for all |a| <= max_order.
inline ProbeReport sphere_moment_check(int dim, int max_order = 8, double tol = 1e-9) {
    ProbeReport r;
    for (int order = 0; order <= max_order; ++order) {
        for_each_multi_index(dim, order, [&](const MultiIndex& a) {
            const double err =
                std::abs(monomial_sphere_moment(a, dim).evaluate(dim) - monomial_sphere_moment_numeric(a, dim));
            r.max_error = std::max(r.max_error, err);
            ++r.total;
            if (err <= tol) ++r.passed;
        });
    }
    return r;
}

/// Randomized duality probes in one dimension: residual of
/// <d*_i T, phi> = -<T, d(phi)/dx_i> per draw.
inline ProbeReport duality_probe_sweep(std::uint64_t seed, int dim, int count, double tol = 1e-8) {
    ProbeGenerator gen(seed);
    ProbeReport r;
    for (int i = 0; i < count; ++i) {
        const ThickDistribution t = gen.thick(dim);
        const TestFunction phi = gen.test_function(dim);
        const int axis = gen.pick(1, dim);
        const double residual = duality_residual(t, axis, phi);
        r.max_error = std::max(r.max_error, residual);
        ++r.total;
        if (residual <= tol) ++r.passed;
    }
    return r;
}

}  // namespace thick
