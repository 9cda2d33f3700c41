#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace thick {

// Exact arithmetic everywhere; no floating point enters the symbolic layer.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Integer int_pow(Integer base, int exp) {
    Integer r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace thick
