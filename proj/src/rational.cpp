#include "rational.hpp"

#include <cctype>

namespace holopack {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string rational_to_fraction_string(const Rational& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

std::string rational_to_decimal_string(const Rational& x, int digits) {
    if (x == 0) return "0";
    BigInt num = numerator(x), den = denominator(x);
    bool neg = num < 0;
    if (neg) num = -num;
    if (den == 1) return (neg ? "-" : "") + num.str();

    // Decimal exponent of the leading digit.
    long exp10 = static_cast<long>(num.str().size()) - static_cast<long>(den.str().size());
    // Scale so that mantissa has `digits` digits: m = round(num/den * 10^(digits-1-exp10)).
    auto scaled = [&](long k) {
        BigInt n = num, d = den;
        if (k >= 0)
            n *= boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(k));
        else
            d *= boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-k));
        return (n + d / 2) / d;
    };
    BigInt mant = scaled(digits - 1 - exp10);
    std::string ms = mant.str();
    while (static_cast<long>(ms.size()) > digits) { // rounding produced an extra digit
        ++exp10;
        mant = scaled(digits - 1 - exp10);
        ms = mant.str();
    }
    while (static_cast<long>(ms.size()) < digits) {
        --exp10;
        mant = scaled(digits - 1 - exp10);
        ms = mant.str();
    }
    std::string out = neg ? "-" : "";
    out += ms.substr(0, 1);
    std::string frac = ms.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    if (exp10 != 0) out += "e" + std::to_string(exp10);
    return out;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    require(!s.empty(), ErrorCode::ParseError, "empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        try {
            BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
            require(q != 0, ErrorCode::ParseError, "zero denominator in '" + text + "'");
            return Rational(p, q);
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "bad fraction literal '" + text + "'");
        }
    }

    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    long exp10 = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            try {
                exp10 = std::stol(s.substr(i + 1));
            } catch (const std::exception&) {
                fail(ErrorCode::ParseError, "bad exponent in '" + text + "'");
            }
            break;
        } else {
            fail(ErrorCode::ParseError, "bad rational literal '" + text + "'");
        }
    }
    require(seen_digit, ErrorCode::ParseError, "no digits in rational literal '" + text + "'");
    BigInt mant(digits.empty() ? "0" : digits);
    if (neg) mant = -mant;
    long net = exp10 - frac_digits;
    Rational r(mant);
    if (net > 0)
        r *= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(net)));
    else if (net < 0)
        r /= Rational(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-net)));
    return r;
}

Rational rational_pow(const Rational& x, long exp) {
    if (exp == 0) return Rational(1);
    require(x != 0 || exp > 0, ErrorCode::InvalidArgument, "zero to a negative power");
    BigInt n = numerator(x), d = denominator(x);
    unsigned e = static_cast<unsigned>(exp > 0 ? exp : -exp);
    BigInt np = boost::multiprecision::pow(n, e), dp = boost::multiprecision::pow(d, e);
    return exp > 0 ? Rational(np, dp) : Rational(dp, np);
}

RationalInterval rational_sqrt_enclosure(const Rational& x) {
    require(x >= 0, ErrorCode::InvalidArgument, "sqrt of a negative rational");
    if (x == 0) return {Rational(0), Rational(0)};
    BigInt num = numerator(x), den = denominator(x);
    // Exact case: both parts perfect squares.
    BigInt sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
    if (sn * sn == num && sd * sd == den) {
        Rational exact(sn, sd);
        return {exact, exact};
    }
    // floor(sqrt(num * den * 10^80)) / (den * 10^40) brackets sqrt(x).
    BigInt scale = boost::multiprecision::pow(BigInt(10), 40);
    BigInt m = boost::multiprecision::sqrt(num * den * scale * scale);
    Rational lo(m, den * scale);
    Rational hi(m + 1, den * scale);
    return {lo, hi};
}

RationalInterval pi_enclosure() { return {Rational(223, 71), Rational(22, 7)}; }

double to_double(const Rational& x) { return static_cast<double>(x); }

} // namespace holopack
