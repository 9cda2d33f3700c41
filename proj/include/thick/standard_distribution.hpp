#pragma once

#include <map>
#include <stdexcept>

#include "thick/multi_index.hpp"
#include "thick/multiplier.hpp"
#include "thick/sphere_algebra.hpp"

namespace thick {

/// How a homogeneous function term r^k psi0 reads as a classical distribution.
enum class FunctionTermKind {
    Regular,         // k > -dim: locally integrable, a regular distribution
    PrincipalValue,  // k = -dim and the profile has zero sphere mean
    FinitePart,      // everything else; needs the Pf regularization
};

inline FunctionTermKind classify_function_term(int degree, const SphericalSymbol& profile) {
    const int dim = profile.dim();
    if (degree > -dim) return FunctionTermKind::Regular;
    if (degree == -dim && sphere_moment(profile).is_zero()) return FunctionTermKind::PrincipalValue;
    return FunctionTermKind::FinitePart;
}

/// Element of D'(R^n) in the image of the projection: a finite sum of
/// classified homogeneous function terms plus multi-index derivatives of
/// the Dirac delta. Delta-derivative entries store the coefficient of
/// D^alpha delta directly (D^alpha being the plain partial derivative).
class StandardDistribution {
public:
    explicit StandardDistribution(int dim) : dim_(dim) {
        if (dim < 2) throw std::invalid_argument("StandardDistribution: dim must be >= 2");
    }

    static StandardDistribution function_term(int degree, const SphericalSymbol& profile) {
        StandardDistribution s(profile.dim());
        s.add_function_term(degree, profile);
        return s;
    }

    static StandardDistribution function_terms(const Multiplier& m) {
        StandardDistribution s(m.dim());
        for (const auto& [k, psi] : m.components()) s.add_function_term(k, psi);
        return s;
    }

    static StandardDistribution delta_term(const MultiIndex& alpha, const ScalarCoeff& coeff) {
        StandardDistribution s(alpha.dim());
        s.add_delta_term(alpha, coeff);
        return s;
    }

    static StandardDistribution dirac(int dim, ScalarCoeff coeff = ScalarCoeff(1)) {
        return delta_term(MultiIndex::zero(dim), coeff);
    }

    int dim() const { return dim_; }
    bool is_zero() const { return functions_.empty() && delta_derivs_.empty(); }
    const std::map<int, SphericalSymbol>& function_parts() const { return functions_; }
    const std::map<MultiIndex, ScalarCoeff>& delta_derivatives() const { return delta_derivs_; }

    FunctionTermKind classify(int degree) const {
        auto it = functions_.find(degree);
        if (it == functions_.end()) throw std::invalid_argument("StandardDistribution: no such function term");
        return classify_function_term(degree, it->second);
    }

    SphericalSymbol function_profile(int degree) const {
        auto it = functions_.find(degree);
        return it == functions_.end() ? SphericalSymbol(dim_) : it->second;
    }

    /// Coefficient of D^alpha delta (zero if absent); alpha = 0 is the Dirac delta itself.
    ScalarCoeff delta_coefficient(const MultiIndex& alpha) const {
        auto it = delta_derivs_.find(alpha);
        return it == delta_derivs_.end() ? ScalarCoeff() : it->second;
    }

    ScalarCoeff dirac_coefficient() const { return delta_coefficient(MultiIndex::zero(dim_)); }

    void add_function_term(int degree, const SphericalSymbol& profile) {
        if (profile.dim() != dim_) throw std::invalid_argument("StandardDistribution: dimension mismatch");
        SphericalSymbol n = normalize(profile);
        if (n.is_zero()) return;
        auto it = functions_.find(degree);
        if (it == functions_.end()) {
            functions_.emplace(degree, std::move(n));
        } else {
            it->second += n;
            if (it->second.is_zero()) functions_.erase(it);
        }
    }

    void add_delta_term(const MultiIndex& alpha, const ScalarCoeff& coeff) {
        if (alpha.dim() != dim_) throw std::invalid_argument("StandardDistribution: dimension mismatch");
        if (coeff.is_zero()) return;
        auto it = delta_derivs_.find(alpha);
        if (it == delta_derivs_.end()) {
            delta_derivs_.emplace(alpha, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) delta_derivs_.erase(it);
        }
    }

    StandardDistribution& operator+=(const StandardDistribution& o) {
        check_dim(o);
        for (const auto& [k, psi] : o.functions_) add_function_term(k, psi);
        for (const auto& [a, c] : o.delta_derivs_) add_delta_term(a, c);
        return *this;
    }

    StandardDistribution& operator-=(const StandardDistribution& o) {
        check_dim(o);
        for (const auto& [k, psi] : o.functions_) add_function_term(k, -psi);
        for (const auto& [a, c] : o.delta_derivs_) add_delta_term(a, -c);
        return *this;
    }

    friend StandardDistribution operator+(StandardDistribution a, const StandardDistribution& b) { return a += b; }
    friend StandardDistribution operator-(StandardDistribution a, const StandardDistribution& b) { return a -= b; }

    StandardDistribution operator-() const {
        StandardDistribution r(dim_);
        for (const auto& [k, psi] : functions_) r.functions_.emplace(k, -psi);
        for (const auto& [a, c] : delta_derivs_) r.delta_derivs_.emplace(a, -c);
        return r;
    }

    StandardDistribution scaled(const ScalarCoeff& c) const {
        StandardDistribution r(dim_);
        for (const auto& [k, psi] : functions_) r.add_function_term(k, psi.scaled(c));
        for (const auto& [a, mc] : delta_derivs_) r.add_delta_term(a, mc * c);
        return r;
    }

    bool operator==(const StandardDistribution& o) const = default;

private:
    void check_dim(const StandardDistribution& o) const {
        if (o.dim_ != dim_) throw std::invalid_argument("StandardDistribution: dimension mismatch");
    }

    int dim_;
    std::map<int, SphericalSymbol> functions_;        // degree -> normalized nonzero profile
    std::map<MultiIndex, ScalarCoeff> delta_derivs_;  // alpha -> coefficient of D^alpha delta
};

}  // namespace thick
