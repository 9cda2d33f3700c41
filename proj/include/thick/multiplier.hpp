#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "thick/sphere_algebra.hpp"

namespace thick {

/// Finite sum of homogeneous terms r^k psi_k(n) with polynomial degree-0
/// profiles. This is the multiplier space acting on thick distributions;
/// it is closed under +, *, and ordinary differentiation.
class Multiplier {
public:
    explicit Multiplier(int dim) : dim_(dim) {
        if (dim < 2) throw std::invalid_argument("Multiplier: dim must be >= 2");
    }

    static Multiplier homogeneous(int degree, const SphericalSymbol& profile) {
        Multiplier m(profile.dim());
        m.add_component(degree, profile);
        return m;
    }

    static Multiplier one(int dim) { return homogeneous(0, SphericalSymbol::one(dim)); }

    int dim() const { return dim_; }
    bool is_zero() const { return components_.empty(); }
    const std::map<int, SphericalSymbol>& components() const { return components_; }

    /// True when exactly one homogeneous component is present.
    bool is_homogeneous() const { return components_.size() == 1; }

    void add_component(int degree, const SphericalSymbol& profile) {
        if (profile.dim() != dim_) throw std::invalid_argument("Multiplier: dimension mismatch");
        SphericalSymbol n = normalize(profile);
        if (n.is_zero()) return;
        auto it = components_.find(degree);
        if (it == components_.end()) {
            components_.emplace(degree, std::move(n));
        } else {
            it->second += n;
            if (it->second.is_zero()) components_.erase(it);
        }
    }

    Multiplier& operator+=(const Multiplier& o) {
        check_dim(o);
        for (const auto& [k, psi] : o.components_) add_component(k, psi);
        return *this;
    }

    Multiplier& operator-=(const Multiplier& o) {
        check_dim(o);
        for (const auto& [k, psi] : o.components_) add_component(k, -psi);
        return *this;
    }

    friend Multiplier operator+(Multiplier a, const Multiplier& b) { return a += b; }
    friend Multiplier operator-(Multiplier a, const Multiplier& b) { return a -= b; }

    Multiplier operator-() const {
        Multiplier r(dim_);
        for (const auto& [k, psi] : components_) r.components_.emplace(k, -psi);
        return r;
    }

    friend Multiplier operator*(const Multiplier& a, const Multiplier& b) {
        a.check_dim(b);
        Multiplier r(a.dim_);
        for (const auto& [ka, pa] : a.components_)
            for (const auto& [kb, pb] : b.components_) r.add_component(ka + kb, pa * pb);
        return r;
    }

    Multiplier& operator*=(const Multiplier& o) { return *this = *this * o; }

    Multiplier scaled(const ScalarCoeff& c) const {
        Multiplier r(dim_);
        for (const auto& [k, psi] : components_) r.add_component(k, psi.scaled(c));
        return r;
    }

    /// Ordinary partial derivative: r^k psi0 has
    ///   d/dx_i (r^k psi0) = r^(k-1) (k n_i psi0 + d(psi0)/dx_i),
    /// computed entirely inside the sphere algebra.
    Multiplier partial(int axis) const {
        Multiplier r(dim_);
        for (const auto& [k, psi] : components_) {
            SphericalSymbol profile = SphericalSymbol::coordinate(dim_, axis) * psi.scaled(ScalarCoeff(Rational(k)));
            profile += delta_derivative(psi, axis);
            r.add_component(k - 1, profile);
        }
        return r;
    }

    bool operator==(const Multiplier& o) const = default;

private:
    void check_dim(const Multiplier& o) const {
        if (o.dim_ != dim_) throw std::invalid_argument("Multiplier: dimension mismatch");
    }

    int dim_;
    std::map<int, SphericalSymbol> components_;  // degree -> normalized nonzero profile
};

/// Division by a single homogeneous monomial c r^k n^a: shifts degrees by -k
/// and cancels exponents. Returns nullopt when the divisor has several terms,
/// a non-invertible coefficient, or an exponent that does not divide out.
inline std::optional<Multiplier> try_divide(const Multiplier& num, const Multiplier& den) {
    if (num.dim() != den.dim()) throw std::invalid_argument("try_divide: dimension mismatch");
    if (den.components().size() != 1) return std::nullopt;
    const auto& [k, psi] = *den.components().begin();
    if (psi.monomials().size() != 1) return std::nullopt;
    const auto& [a, c] = *psi.monomials().begin();
    if (!c.is_single_term()) return std::nullopt;
    const ScalarCoeff inv = c.inverse();

    const int dim = num.dim();
    Multiplier out(dim);
    for (const auto& [deg, profile] : num.components()) {
        SphericalSymbol quotient(dim);
        for (const auto& [ma, mc] : profile.monomials()) {
            std::vector<int> e(ma.exponents());
            for (int i = 0; i < dim; ++i) {
                e[i] -= a[i];
                if (e[i] < 0) return std::nullopt;
            }
            quotient.add_monomial(MultiIndex(std::move(e)), mc * inv);
        }
        out.add_component(deg - k, quotient);
    }
    return out;
}

}  // namespace thick
