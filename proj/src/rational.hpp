#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace holopack {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" (lossless round-trip form).
std::string rational_to_fraction_string(const Rational& x);

// Decimal rendering with the given number of significant digits, correctly
// signed, e.g. "1.963028169e-31". Exact integers print without exponent.
std::string rational_to_decimal_string(const Rational& x, int digits = 12);

// Accepts integers, fractions "p/q", decimals "0.25", and scientific forms
// "1e-100" / "2.5E3". Every accepted form is exact.
Rational parse_rational(const std::string& text);

// pow with integer exponent (exp may be negative; x must be nonzero then).
Rational rational_pow(const Rational& x, long exp);

// Enclosure lo <= sqrt(x) <= hi with hi - lo <= x-scaled 10^-40; exact when x
// is a perfect square of rationals.
struct RationalInterval {
    Rational lo;
    Rational hi;
};
RationalInterval rational_sqrt_enclosure(const Rational& x);

// Certified pi enclosure [223/71, 22/7].
RationalInterval pi_enclosure();

double to_double(const Rational& x);

} // namespace holopack
