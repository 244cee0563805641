#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace tldp {

// All lattice arithmetic is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::abs;

struct ExtGcd {
    Int g;      // gcd(|a|,|b|) > 0
    Int x, y;   // x*a + y*b == g
};

/// Extended Euclidean algorithm for possibly negative inputs.
/// Throws std::invalid_argument when both inputs are zero.
inline ExtGcd ext_gcd(const Int& a, const Int& b) {
    if (a == 0 && b == 0)
        throw std::invalid_argument("ext_gcd: gcd(0,0) is undefined");
    Int old_r = abs(a), r = abs(b);
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * x;     old_x = x; x = t;
        t = old_y - q * y;     old_y = y; y = t;
    }
    if (a < 0) old_x = -old_x;
    if (b < 0) old_y = -old_y;
    return ExtGcd{old_r, old_x, old_y};
}

/// Largest integer <= value.
inline Int floor_rat(const Rat& value) {
    Int n = numerator(value), d = denominator(value);
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

/// Exact integer division; throws std::logic_error on a nonzero remainder.
inline Int exact_div(const Int& num, const Int& den, const char* what) {
    if (den == 0 || num % den != 0)
        throw std::logic_error(std::string("exact_div: not divisible in ") + what);
    return num / den;
}

}  // namespace tldp
