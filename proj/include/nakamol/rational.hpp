#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace nakamol {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "p/q" form (plain "p" when q == 1). Never a float.
inline std::string to_string(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

Rational parse_rational(const std::string& s);

/// Exact integer power; requires r != 0 when e < 0.
inline Rational rat_pow(const Rational& r, long long e) {
    if (e < 0) {
        if (r == 0) throw std::domain_error("negative power of zero");
        return 1 / rat_pow(r, -e);
    }
    Rational out = 1, base = r;
    for (; e > 0; e >>= 1) {
        if (e & 1) out *= base;
        base *= base;
    }
    return out;
}

}  // namespace nakamol
