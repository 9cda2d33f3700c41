#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "thick/multi_index.hpp"
#include "thick/scalar_coeff.hpp"

namespace thick {

/// Polynomial in the sphere coordinates n1..nD with ScalarCoeff coefficients,
/// read modulo the relation n1^2 + ... + nD^2 = 1. Represents a smooth
/// density on the unit sphere. The normal form eliminates nD^2 via
/// nD^2 -> 1 - sum_{i<D} ni^2, leaving every monomial with nD-exponent <= 1.
class SphericalSymbol {
public:
    explicit SphericalSymbol(int dim) : dim_(dim) {
        if (dim < 2) throw std::invalid_argument("SphericalSymbol: dim must be >= 2");
    }

    static SphericalSymbol constant(int dim, ScalarCoeff c) {
        SphericalSymbol s(dim);
        s.add_monomial(MultiIndex::zero(dim), std::move(c));
        return s;
    }

    static SphericalSymbol one(int dim) { return constant(dim, ScalarCoeff(1)); }

    static SphericalSymbol monomial(int dim, const MultiIndex& a, ScalarCoeff c = ScalarCoeff(1)) {
        if (a.dim() != dim) throw std::invalid_argument("SphericalSymbol: multi-index dimension mismatch");
        SphericalSymbol s(dim);
        s.add_monomial(a, std::move(c));
        return s;
    }

    /// The coordinate function n_axis (1-based).
    static SphericalSymbol coordinate(int dim, int axis) {
        if (axis < 1 || axis > dim) throw std::invalid_argument("SphericalSymbol: axis out of range");
        return monomial(dim, MultiIndex::unit(dim, axis));
    }

    int dim() const { return dim_; }
    bool is_zero() const { return monomials_.empty(); }
    const std::map<MultiIndex, ScalarCoeff>& monomials() const { return monomials_; }

    int degree() const {
        int d = 0;
        for (const auto& [a, c] : monomials_) d = std::max(d, a.order());
        return d;
    }

    void add_monomial(const MultiIndex& a, const ScalarCoeff& c) {
        if (c.is_zero()) return;
        auto it = monomials_.find(a);
        if (it == monomials_.end()) {
            monomials_.emplace(a, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) monomials_.erase(it);
        }
    }

    SphericalSymbol& operator+=(const SphericalSymbol& o) {
        check_dim(o);
        for (const auto& [a, c] : o.monomials_) add_monomial(a, c);
        return *this;
    }

    SphericalSymbol& operator-=(const SphericalSymbol& o) {
        check_dim(o);
        for (const auto& [a, c] : o.monomials_) add_monomial(a, -c);
        return *this;
    }

    friend SphericalSymbol operator+(SphericalSymbol a, const SphericalSymbol& b) { return a += b; }
    friend SphericalSymbol operator-(SphericalSymbol a, const SphericalSymbol& b) { return a -= b; }

    SphericalSymbol operator-() const {
        SphericalSymbol r(dim_);
        for (const auto& [a, c] : monomials_) r.monomials_.emplace(a, -c);
        return r;
    }

    friend SphericalSymbol operator*(const SphericalSymbol& a, const SphericalSymbol& b) {
        a.check_dim(b);
        SphericalSymbol r(a.dim_);
        for (const auto& [ma, ca] : a.monomials_)
            for (const auto& [mb, cb] : b.monomials_) r.add_monomial(ma.plus(mb), ca * cb);
        return r;
    }

    SphericalSymbol& operator*=(const SphericalSymbol& o) { return *this = *this * o; }

    SphericalSymbol scaled(const ScalarCoeff& c) const {
        SphericalSymbol r(dim_);
        if (c.is_zero()) return r;
        for (const auto& [a, mc] : monomials_) r.add_monomial(a, mc * c);
        return r;
    }

    /// Representative equality (not equality on the sphere; see equal_on_sphere).
    bool operator==(const SphericalSymbol& o) const = default;

    bool is_normal() const {
        for (const auto& [a, c] : monomials_)
            if (a[dim_ - 1] > 1) return false;
        return true;
    }

    /// Numerical evaluation at a point (for cross-checks against quadrature).
    double evaluate(std::span<const double> point) const {
        double v = 0.0;
        for (const auto& [a, c] : monomials_) {
            double m = c.evaluate(dim_);
            for (int i = 0; i < dim_; ++i)
                for (int e = 0; e < a[i]; ++e) m *= point[i];
            v += m;
        }
        return v;
    }

private:
    void check_dim(const SphericalSymbol& o) const {
        if (o.dim_ != dim_) throw std::invalid_argument("SphericalSymbol: dimension mismatch");
    }

    int dim_;
    std::map<MultiIndex, ScalarCoeff> monomials_;  // no zero coefficients stored
};

/// Canonical representative modulo sum ni^2 = 1: reduces the last
/// coordinate's square until every monomial has nD-exponent <= 1.
/// Idempotent and degree-non-increasing.
inline SphericalSymbol normalize(const SphericalSymbol& p) {
    const int dim = p.dim();
    SphericalSymbol out(dim);
    std::vector<std::pair<MultiIndex, ScalarCoeff>> work(p.monomials().begin(), p.monomials().end());
    while (!work.empty()) {
        auto [a, c] = std::move(work.back());
        work.pop_back();
        if (c.is_zero()) continue;
        if (a[dim - 1] <= 1) {
            out.add_monomial(a, c);
            continue;
        }
        // n^a = n^b * nD^2 with b = a - 2 e_D, and nD^2 = 1 - sum_{i<D} ni^2.
        MultiIndex b = a.minus_unit(dim).minus_unit(dim);
        work.emplace_back(b, c);
        for (int i = 1; i < dim; ++i) work.emplace_back(b.plus_unit(i).plus_unit(i), -c);
    }
    return out;
}

inline bool equal_on_sphere(const SphericalSymbol& p, const SphericalSymbol& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("equal_on_sphere: dimension mismatch");
    return normalize(p - q).is_zero();
}

/// Derivative on the sphere: restriction to S of the j-th partial of the
/// degree-0 homogeneous extension. Monomial rule:
///   d(n^a)/dx_j = a_j n^(a-e_j) - |a| n_j n^a,
/// extended linearly; result returned in normal form. Well-defined modulo
/// the sphere relation (the ideal (sum ni^2 - 1) is preserved).
inline SphericalSymbol delta_derivative(const SphericalSymbol& p, int axis) {
    if (axis < 1 || axis > p.dim()) throw std::invalid_argument("delta_derivative: axis out of range");
    SphericalSymbol r(p.dim());
    for (const auto& [a, c] : p.monomials()) {
        if (a[axis - 1] > 0) r.add_monomial(a.minus_unit(axis), c * ScalarCoeff(Rational(a[axis - 1])));
        const int order = a.order();
        if (order > 0) r.add_monomial(a.plus_unit(axis), c * ScalarCoeff(Rational(-order)));
    }
    return normalize(r);
}

/// Exact integral of one monomial over the unit sphere, as a rational
/// multiple of C:
///   int_S n^a dsigma = C * prod_i [(2b_i)! / (4^{b_i} b_i!)] * 2^B / prod_{t<B} (dim + 2t)
/// with a_i = 2 b_i all even and B = sum b_i; zero if any exponent is odd.
inline ScalarCoeff monomial_sphere_moment(const MultiIndex& a, int dim) {
    if (!a.all_even()) return ScalarCoeff();
    Rational ratio(1);
    int big_b = 0;
    for (int i = 0; i < dim; ++i) {
        const int b = a[i] / 2;
        big_b += b;
        ratio *= Rational(factorial(2 * b), int_pow(4, b) * factorial(b));
    }
    Integer denom = 1;
    for (int t = 0; t < big_b; ++t) denom *= (dim + 2 * t);
    ratio *= Rational(int_pow(2, big_b), denom);
    return ScalarCoeff::c_power(1, ratio);
}

/// int_S p dsigma, exact. The monomial formula integrates the true
/// monomial restricted to the sphere, so any representative gives the
/// same answer; no prior normalization needed.
inline ScalarCoeff sphere_moment(const SphericalSymbol& p) {
    ScalarCoeff total;
    for (const auto& [a, c] : p.monomials()) total += c * monomial_sphere_moment(a, p.dim());
    return total;
}

/// mu_ij = d(n_i)/dx_j = delta_ij - n_i n_j on the unit sphere.
inline SphericalSymbol mu_matrix_entry(int dim, int i, int j) {
    return delta_derivative(SphericalSymbol::coordinate(dim, i), j);
}

/// Kronecker delta as a constant symbol.
inline SphericalSymbol kronecker(int dim, int i, int j) {
    return i == j ? SphericalSymbol::one(dim) : SphericalSymbol(dim);
}

}  // namespace thick
