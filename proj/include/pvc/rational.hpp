#pragma once

// Exact arbitrary-precision rationals (canonical form: positive denominator,
// reduced fraction) plus parsing of "p/q" strings for CLI flags.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

#include "pvc/core.hpp"

namespace pvc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

// Accepts "3", "-3", "1/2".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline BigInt floor_rational(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline BigInt ceil_rational(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) > 0 && q * denominator(r) != numerator(r)) ++q;
    return q;
}

inline Power to_power(const BigInt& b) { return static_cast<Power>(b.convert_to<long long>()); }

inline bool is_half_integral(const Rational& r) {
    Rational doubled = 2 * r;
    return denominator(doubled) == 1;
}

}  // namespace pvc
