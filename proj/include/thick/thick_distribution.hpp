#pragma once

#include <map>
#include <stdexcept>

#include "thick/multiplier.hpp"
#include "thick/sphere_algebra.hpp"

namespace thick {

/// A distribution with one thick point at the origin, stored as a finite
/// sum of two term species:
///   Pf terms:    degree k  -> profile psi0, denoting Pf(r^k psi0(n))
///   delta terms: order q   -> density g,    denoting g(n) delta*^[q]
/// Values are canonical: profiles and densities are normalized and nonzero,
/// so equality is plain term-wise comparison. A Pf term of degree k has
/// homogeneity grade k; a delta term of order q has grade -dim-q.
class ThickDistribution {
public:
    explicit ThickDistribution(int dim) : dim_(dim) {
        if (dim < 2) throw std::invalid_argument("ThickDistribution: dim must be >= 2");
    }

    static ThickDistribution pf(int degree, const SphericalSymbol& profile) {
        ThickDistribution t(profile.dim());
        t.add_pf(degree, profile);
        return t;
    }

    static ThickDistribution pf(const Multiplier& m) {
        ThickDistribution t(m.dim());
        for (const auto& [k, psi] : m.components()) t.add_pf(k, psi);
        return t;
    }

    static ThickDistribution pf_one(int dim) { return pf(0, SphericalSymbol::one(dim)); }

    static ThickDistribution thick_delta(int order, const SphericalSymbol& density) {
        ThickDistribution t(density.dim());
        t.add_delta(order, density);
        return t;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return pf_.empty() && deltas_.empty(); }
    const std::map<int, SphericalSymbol>& pf_parts() const { return pf_; }
    const std::map<int, SphericalSymbol>& delta_parts() const { return deltas_; }

    /// Profile of the Pf term of the given degree (zero symbol if absent).
    SphericalSymbol pf_profile(int degree) const {
        auto it = pf_.find(degree);
        return it == pf_.end() ? SphericalSymbol(dim_) : it->second;
    }

    /// Density of the thick delta of the given order (zero symbol if absent).
    SphericalSymbol delta_density(int order) const {
        auto it = deltas_.find(order);
        return it == deltas_.end() ? SphericalSymbol(dim_) : it->second;
    }

    bool has_negative_order_delta() const {
        return !deltas_.empty() && deltas_.begin()->first < 0;
    }

    void add_pf(int degree, const SphericalSymbol& profile) {
        merge(pf_, degree, profile);
    }

    void add_delta(int order, const SphericalSymbol& density) {
        merge(deltas_, order, density);
    }

    ThickDistribution& operator+=(const ThickDistribution& o) {
        check_dim(o);
        for (const auto& [k, psi] : o.pf_) add_pf(k, psi);
        for (const auto& [q, g] : o.deltas_) add_delta(q, g);
        return *this;
    }

    ThickDistribution& operator-=(const ThickDistribution& o) {
        check_dim(o);
        for (const auto& [k, psi] : o.pf_) add_pf(k, -psi);
        for (const auto& [q, g] : o.deltas_) add_delta(q, -g);
        return *this;
    }

    friend ThickDistribution operator+(ThickDistribution a, const ThickDistribution& b) { return a += b; }
    friend ThickDistribution operator-(ThickDistribution a, const ThickDistribution& b) { return a -= b; }

    ThickDistribution operator-() const {
        ThickDistribution r(dim_);
        for (const auto& [k, psi] : pf_) r.pf_.emplace(k, -psi);
        for (const auto& [q, g] : deltas_) r.deltas_.emplace(q, -g);
        return r;
    }

    ThickDistribution scaled(const ScalarCoeff& c) const {
        ThickDistribution r(dim_);
        for (const auto& [k, psi] : pf_) r.add_pf(k, psi.scaled(c));
        for (const auto& [q, g] : deltas_) r.add_delta(q, g.scaled(c));
        return r;
    }

    bool operator==(const ThickDistribution& o) const = default;

private:
    void check_dim(const ThickDistribution& o) const {
        if (o.dim_ != dim_) throw std::invalid_argument("ThickDistribution: dimension mismatch");
    }

    void merge(std::map<int, SphericalSymbol>& dst, int key, const SphericalSymbol& sym) {
        if (sym.dim() != dim_) throw std::invalid_argument("ThickDistribution: dimension mismatch");
        SphericalSymbol n = normalize(sym);
        if (n.is_zero()) return;
        auto it = dst.find(key);
        if (it == dst.end()) {
            dst.emplace(key, std::move(n));
        } else {
            it->second += n;
            if (it->second.is_zero()) dst.erase(it);
        }
    }

    int dim_;
    std::map<int, SphericalSymbol> pf_;
    std::map<int, SphericalSymbol> deltas_;
};

inline ThickDistribution scale(const ScalarCoeff& c, const ThickDistribution& t) { return t.scaled(c); }

/// Multiplication by the homogeneous function r^k psi0(n):
/// Pf degrees shift by +k with profiles multiplied by psi0; delta orders
/// shift by -k (r^k delta*^[q] = delta*^[q-k]) with densities multiplied.
inline ThickDistribution multiply_homogeneous(int k, const SphericalSymbol& psi0, const ThickDistribution& t) {
    if (psi0.dim() != t.dim()) throw std::invalid_argument("multiply_homogeneous: dimension mismatch");
    ThickDistribution r(t.dim());
    for (const auto& [deg, profile] : t.pf_parts()) r.add_pf(deg + k, psi0 * profile);
    for (const auto& [q, g] : t.delta_parts()) r.add_delta(q - k, psi0 * g);
    return r;
}

inline ThickDistribution multiply(const Multiplier& m, const ThickDistribution& t) {
    ThickDistribution r(t.dim());
    for (const auto& [k, psi] : m.components()) r += multiply_homogeneous(k, psi, t);
    return r;
}

/// Thick partial derivative. Every input term of grade g contributes only
/// terms of grade g-1:
///   Pf(r^k psi0)   -> Pf(r^(k-1) (k n_i psi0 + d(psi0)/dx_i)) + C n_i psi0 delta*^[1-n-k]
///   g delta*^[q]   -> (d(g)/dx_i - (q+n) n_i g) delta*^[q+1]
inline ThickDistribution thick_partial(int axis, const ThickDistribution& t) {
    const int dim = t.dim();
    if (axis < 1 || axis > dim) throw std::invalid_argument("thick_partial: axis out of range");
    const SphericalSymbol ni = SphericalSymbol::coordinate(dim, axis);
    ThickDistribution r(dim);
    for (const auto& [k, psi0] : t.pf_parts()) {
        SphericalSymbol ordinary = ni * psi0.scaled(ScalarCoeff(Rational(k)));
        ordinary += delta_derivative(psi0, axis);
        r.add_pf(k - 1, ordinary);
        r.add_delta(1 - dim - k, (ni * psi0).scaled(ScalarCoeff::c_power(1)));
    }
    for (const auto& [q, g] : t.delta_parts()) {
        SphericalSymbol density = delta_derivative(g, axis);
        density += (ni * g).scaled(ScalarCoeff(Rational(-(q + dim))));
        r.add_delta(q + 1, density);
    }
    return r;
}

/// Closed form for d*_i d*_j Pf(r^k psi0):
///   Pf(d^2(r^k psi0)/dx_i dx_j)
///   + C ((delta_ij + 2(k-1) n_i n_j) psi0 + n_j d(psi0)/dx_i + n_i d(psi0)/dx_j) delta*^[2-n-k].
/// Agrees exactly with two applications of thick_partial.
inline ThickDistribution second_partial_closed_form(int i, int j, int k, const SphericalSymbol& psi0) {
    const int dim = psi0.dim();
    if (i < 1 || i > dim || j < 1 || j > dim)
        throw std::invalid_argument("second_partial_closed_form: axis out of range");
    const Multiplier second = Multiplier::homogeneous(k, psi0).partial(j).partial(i);
    ThickDistribution r = ThickDistribution::pf(second);

    const SphericalSymbol ni = SphericalSymbol::coordinate(dim, i);
    const SphericalSymbol nj = SphericalSymbol::coordinate(dim, j);
    SphericalSymbol density = kronecker(dim, i, j) * psi0;
    density += (ni * nj * psi0).scaled(ScalarCoeff(Rational(2 * (k - 1))));
    density += nj * delta_derivative(psi0, i);
    density += ni * delta_derivative(psi0, j);
    r.add_delta(2 - dim - k, density.scaled(ScalarCoeff::c_power(1)));
    return r;
}

}  // namespace thick
