#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "thick/rational.hpp"

namespace thick {

/// Surface area of the unit sphere in R^dim, 2 pi^(dim/2) / Gamma(dim/2).
inline double unit_sphere_area(int dim) {
    return 2.0 * std::pow(std::numbers::pi, dim / 2.0) / std::tgamma(dim / 2.0);
}

/// Exact coefficient: a Laurent polynomial in the symbol C (the surface
/// area of the unit sphere) with rational coefficients. C is treated as
/// transcendental, so equality of coefficients is plain term-wise equality.
class ScalarCoeff {
public:
    ScalarCoeff() = default;

    ScalarCoeff(Rational q) {  // NOLINT(google-explicit-constructor): rationals embed naturally
        if (q != 0) terms_[0] = std::move(q);
    }

    ScalarCoeff(long v) : ScalarCoeff(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    ScalarCoeff(int v) : ScalarCoeff(Rational(v)) {}   // NOLINT(google-explicit-constructor)

    /// q * C^power
    static ScalarCoeff c_power(int power, Rational q = Rational(1)) {
        ScalarCoeff s;
        if (q != 0) s.terms_[power] = std::move(q);
        return s;
    }

    bool is_zero() const { return terms_.empty(); }

    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }

    bool is_single_term() const { return terms_.size() == 1; }

    /// Coefficient of C^power (0 if absent).
    Rational coeff(int power) const {
        auto it = terms_.find(power);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const std::map<int, Rational>& terms() const { return terms_; }

    ScalarCoeff& operator+=(const ScalarCoeff& o) {
        for (const auto& [p, q] : o.terms_) add_term(p, q);
        return *this;
    }

    ScalarCoeff& operator-=(const ScalarCoeff& o) {
        for (const auto& [p, q] : o.terms_) add_term(p, -q);
        return *this;
    }

    ScalarCoeff operator-() const {
        ScalarCoeff r;
        for (const auto& [p, q] : terms_) r.terms_[p] = -q;
        return r;
    }

    friend ScalarCoeff operator+(ScalarCoeff a, const ScalarCoeff& b) { return a += b; }
    friend ScalarCoeff operator-(ScalarCoeff a, const ScalarCoeff& b) { return a -= b; }

    friend ScalarCoeff operator*(const ScalarCoeff& a, const ScalarCoeff& b) {
        ScalarCoeff r;
        for (const auto& [pa, qa] : a.terms_)
            for (const auto& [pb, qb] : b.terms_) r.add_term(pa + pb, qa * qb);
        return r;
    }

    ScalarCoeff& operator*=(const ScalarCoeff& o) { return *this = *this * o; }

    /// Multiply by C^shift.
    ScalarCoeff shifted(int shift) const {
        ScalarCoeff r;
        for (const auto& [p, q] : terms_) r.terms_[p + shift] = q;
        return r;
    }

    /// Multiplicative inverse; defined only for single-term coefficients q*C^p.
    ScalarCoeff inverse() const {
        if (terms_.size() != 1) throw std::invalid_argument("ScalarCoeff: inverse of multi-term coefficient");
        const auto& [p, q] = *terms_.begin();
        return c_power(-p, Rational(1) / q);
    }

    bool operator==(const ScalarCoeff& o) const = default;

    /// Numerical value with C substituted for the given dimension.
    double evaluate(int dim) const {
        const double c = unit_sphere_area(dim);
        double v = 0.0;
        for (const auto& [p, q] : terms_) v += to_double(q) * std::pow(c, p);
        return v;
    }

    /// Debug/diagnostic form, e.g. "1/3*C + 2*C^-1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, q] : terms_) {
            if (!first) os << " + ";
            os << q.str();
            if (p != 0) os << "*C^" << p;
            first = false;
        }
        return os.str();
    }

private:
    void add_term(int power, const Rational& q) {
        auto it = terms_.find(power);
        if (it == terms_.end()) {
            if (q != 0) terms_.emplace(power, q);
        } else {
            it->second += q;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<int, Rational> terms_;  // C power -> rational, no zero entries
};

inline ScalarCoeff operator*(const Rational& q, const ScalarCoeff& s) { return ScalarCoeff(q) * s; }

}  // namespace thick
