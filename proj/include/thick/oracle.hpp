#pragma once

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "thick/quadrature.hpp"
#include "thick/thick_distribution.hpp"

namespace thick {

/// Numeric probe function: a finite sum of Gaussian-weighted generators
///   coeff * n^a * r^m * exp(-r^2).
/// The family is closed under d/dx_i, every generator has an explicit
/// radial-angular factorization, and the Gaussian decay removes all
/// boundary terms at infinity, so the duality identity for the thick
/// derivative can be checked against closed-form pairings.
class TestFunction {
public:
    explicit TestFunction(int dim) : dim_(dim) {
        if (dim < 2) throw std::invalid_argument("TestFunction: dim must be >= 2");
    }

    /// Plain Gaussian exp(-r^2).
    static TestFunction gaussian(int dim) {
        TestFunction f(dim);
        f.add_term(Rational(1), MultiIndex::zero(dim), 0);
        return f;
    }

    static TestFunction generator(const Rational& coeff, const MultiIndex& a, int m) {
        TestFunction f(a.dim());
        f.add_term(coeff, a, m);
        return f;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<MultiIndex, int>, Rational>& terms() const { return terms_; }

    void add_term(const Rational& coeff, const MultiIndex& a, int m) {
        if (a.dim() != dim_) throw std::invalid_argument("TestFunction: dimension mismatch");
        if (coeff == 0) return;
        auto key = std::make_pair(a, m);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TestFunction& operator+=(const TestFunction& o) {
        if (o.dim_ != dim_) throw std::invalid_argument("TestFunction: dimension mismatch");
        for (const auto& [key, c] : o.terms_) add_term(c, key.first, key.second);
        return *this;
    }

    /// d/dx_i of n^a r^m e^(-r^2), staying inside the family:
    ///   a_i n^(a-e_i) r^(m-1) + (m-|a|) n^(a+e_i) r^(m-1) - 2 n^(a+e_i) r^(m+1).
    TestFunction partial(int axis) const {
        if (axis < 1 || axis > dim_) throw std::invalid_argument("TestFunction: axis out of range");
        TestFunction out(dim_);
        for (const auto& [key, c] : terms_) {
            const auto& [a, m] = key;
            if (a[axis - 1] > 0) out.add_term(c * a[axis - 1], a.minus_unit(axis), m - 1);
            out.add_term(c * (m - a.order()), a.plus_unit(axis), m - 1);
            out.add_term(c * -2, a.plus_unit(axis), m + 1);
        }
        return out;
    }

    /// Coefficient a_q(w) of r^q in the expansion at the origin:
    /// each generator contributes (-1)^t / t! * n^a at q = m + 2t, t >= 0.
    SphericalSymbol expansion_coefficient(int q) const {
        SphericalSymbol out(dim_);
        for (const auto& [key, c] : terms_) {
            const auto& [a, m] = key;
            if (q < m || (q - m) % 2 != 0) continue;
            const int t = (q - m) / 2;
            Rational coeff = c / Rational(factorial(t));
            if (t % 2 != 0) coeff = -coeff;
            out.add_monomial(a, ScalarCoeff(coeff));
        }
        return out;
    }

    bool operator==(const TestFunction& o) const = default;

private:
    int dim_;
    std::map<std::pair<MultiIndex, int>, Rational> terms_;
};

namespace detail {

/// F.p. int_0^1 r^s e^(-r^2) dr + int_1^inf r^s e^(-r^2) dr, with the
/// divergent part handled by subtracting the offending Taylor terms of the
/// Gaussian on [0,1] and reinstating their integrals in closed form:
///   F.p. = int_0^1 r^s (e^(-r^2) - sum_{j in N} (-1)^j r^(2j)/j!) dr
///        + sum_{j in N, s+2j+1 != 0} (-1)^j / (j! (s+2j+1))
///        + int_1^inf r^s e^(-r^2) dr,
/// N = { j >= 0 : s+2j+1 <= 0 }. Log-in-epsilon terms are discarded, i.e.
/// the value is the coefficient of epsilon^0 (Hadamard's convention).
inline double radial_finite_part_compute(int s) {
    // |N|: j in N iff s+2j+1 <= 0, so j <= (-s-1)/2.
    const int n_cut = (s <= -1) ? ((-s - 1) / 2 + 1) : 0;
    double correction = 0.0;
    double inv_factorial = 1.0;
    for (int j = 0; j < n_cut; ++j) {
        if (j > 0) inv_factorial /= j;
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        if (s + 2 * j + 1 != 0) correction += sign * inv_factorial / (s + 2 * j + 1);
    }

    // On [0,1] the subtracted integrand equals the convergent tail series
    //   sum_{j >= |N|} (-1)^j r^(s+2j) / j!,
    // whose leading exponent s+2|N| is 0 or 1; summing it directly avoids
    // the cancellation of forming e^(-r^2) minus a near-equal partial sum.
    const auto near = [s, n_cut](double r) {
        if (n_cut == 0) return std::pow(r, s) * std::exp(-r * r);
        double term = std::pow(r, s + 2 * n_cut);
        for (int j = 1; j <= n_cut; ++j) term /= j;
        if (n_cut % 2 != 0) term = -term;
        double sum = 0.0;
        for (int j = n_cut; std::abs(term) > 1e-18 && j < n_cut + 90; ++j) {
            sum += term;
            term *= -r * r / (j + 1);
        }
        return sum;
    };
    const auto far = [s](double r) { return std::pow(r, s) * std::exp(-r * r); };

    const double near_part = integrate_smooth(near, 0.0, 1.0, 4);
    const double far_part = integrate_smooth(far, 1.0, 12.0, 6);
    return near_part + correction + far_part;
}

}  // namespace detail

/// Memoized table of F.p. int_0^inf r^s e^(-r^2) dr; for s >= 0 this is
/// the convergent integral Gamma((s+1)/2)/2. Safe for concurrent readers.
class RadialFinitePartTable {
public:
    static RadialFinitePartTable& instance() {
        static RadialFinitePartTable table;
        return table;
    }

    double value(int s) const {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(s);
        if (it == cache_.end()) it = cache_.emplace(s, detail::radial_finite_part_compute(s)).first;
        return it->second;
    }

private:
    mutable std::mutex mutex_;
    mutable std::map<int, double> cache_;
};

inline double radial_finite_part(int s) { return RadialFinitePartTable::instance().value(s); }

/// <T, phi>: Pf terms pair through sphere moments and radial finite parts,
///   <Pf(r^k psi0), n^a r^m e^(-r^2)> = moment(psi0 n^a) * F.p. int r^(k+m+dim-1) e^(-r^2) dr;
/// thick deltas extract the matching expansion coefficient,
///   <g delta*^[q], phi> = (1/C) moment(g * a_q).
inline double dual_pairing(const ThickDistribution& t, const TestFunction& phi) {
    const int dim = t.dim();
    if (phi.dim() != dim) throw std::invalid_argument("dual_pairing: dimension mismatch");
    double total = 0.0;
    for (const auto& [k, psi0] : t.pf_parts()) {
        for (const auto& [key, c] : phi.terms()) {
            const auto& [a, m] = key;
            const ScalarCoeff angular = sphere_moment(psi0 * SphericalSymbol::monomial(dim, a));
            if (angular.is_zero()) continue;
            total += to_double(c) * angular.evaluate(dim) * radial_finite_part(k + m + dim - 1);
        }
    }
    const double c_num = unit_sphere_area(dim);
    for (const auto& [q, g] : t.delta_parts()) {
        const SphericalSymbol aq = phi.expansion_coefficient(q);
        if (aq.is_zero()) continue;
        total += sphere_moment(g * aq).evaluate(dim) / c_num;
    }
    return total;
}

/// Relative defect of the duality definition of the thick derivative on one
/// probe: |<d*_i T, phi> + <T, d(phi)/dx_i>| / (1 + |<d*_i T, phi>|).
inline double duality_residual(const ThickDistribution& t, int axis, const TestFunction& phi) {
    const double lhs = dual_pairing(thick_partial(axis, t), phi);
    const double rhs = dual_pairing(t, phi.partial(axis));
    return std::abs(lhs + rhs) / (1.0 + std::abs(lhs));
}

}  // namespace thick
