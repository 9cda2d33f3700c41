#pragma once

#include <compare>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "thick/rational.hpp"

namespace thick {

/// Exponent vector (a_1, ..., a_dim) with non-negative entries.
/// Axis arguments throughout the library are 1-based, matching the
/// coordinate names n1..nD; component access is 0-based.
class MultiIndex {
public:
    MultiIndex() = default;

    explicit MultiIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {
        for (int e : exps_)
            if (e < 0) throw std::invalid_argument("MultiIndex: negative exponent");
    }

    static MultiIndex zero(int dim) { return MultiIndex(std::vector<int>(dim, 0)); }

    static MultiIndex unit(int dim, int axis) {
        std::vector<int> e(dim, 0);
        e.at(axis - 1) = 1;
        return MultiIndex(std::move(e));
    }

    int dim() const { return static_cast<int>(exps_.size()); }

    /// |a| = sum of exponents.
    int order() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

    int operator[](int i) const { return exps_[i]; }

    bool all_even() const {
        for (int e : exps_)
            if (e % 2 != 0) return false;
        return true;
    }

    MultiIndex plus(const MultiIndex& o) const {
        check_dim(o);
        std::vector<int> e(exps_);
        for (size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
        return MultiIndex(std::move(e));
    }

    MultiIndex plus_unit(int axis) const { return plus(unit(dim(), axis)); }

    /// a - e_axis; requires a positive exponent on that axis.
    MultiIndex minus_unit(int axis) const {
        std::vector<int> e(exps_);
        if (e.at(axis - 1) <= 0) throw std::invalid_argument("MultiIndex: exponent underflow");
        --e[axis - 1];
        return MultiIndex(std::move(e));
    }

    /// alpha! = prod a_i!
    Integer factorial_product() const {
        Integer f = 1;
        for (int e : exps_) f *= factorial(e);
        return f;
    }

    const std::vector<int>& exponents() const { return exps_; }

    auto operator<=>(const MultiIndex&) const = default;

private:
    void check_dim(const MultiIndex& o) const {
        if (o.dim() != dim()) throw std::invalid_argument("MultiIndex: dimension mismatch");
    }

    std::vector<int> exps_;
};

/// Calls fn once for every multi-index of length dim with |a| = order.
inline void for_each_multi_index(int dim, int order, const std::function<void(const MultiIndex&)>& fn) {
    std::vector<int> current(dim, 0);
    // Lexicographic enumeration of compositions of `order` into dim parts.
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == dim - 1) {
            current[pos] = remaining;
            fn(MultiIndex(current));
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            current[pos] = v;
            rec(pos + 1, remaining - v);
        }
    };
    if (order >= 0 && dim >= 1) rec(0, order);
}

}  // namespace thick
