#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace glcq {

// Arbitrary-precision exact arithmetic: q-power exponents and elimination
// coefficients grow with the window size, so no fixed-width types anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/// r^e for integer e (negative e inverts; requires r != 0 in that case).
inline Rational rational_pow(const Rational& r, long long e) {
    if (e == 0) return Rational(1);
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    const auto k = static_cast<unsigned>(e < 0 ? -e : e);
    Integer np = boost::multiprecision::pow(num, k);
    Integer dp = boost::multiprecision::pow(den, k);
    if (e > 0) return Rational(np, dp);
    return Rational(dp, np);
}

} // namespace glcq
