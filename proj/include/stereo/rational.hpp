#pragma once

/**
 * Exact arbitrary-precision integer and rational scalars.
 *
 * Every quantity in this library that can be rational is kept rational;
 * nothing is ever rounded except at the final printing step, and then
 * only explicitly (see decimal_string below).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace stereo {

using Int = boost::multiprecision::cpp_int;

// Reduced fraction, denominator > 0.  boost maintains both invariants.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// Floor of sqrt(n); n must be >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

/// True when n is a perfect square; if so *root gets the square root.
inline bool perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int s = isqrt(n);
    if (s * s != n) return false;
    if (root) *root = s;
    return true;
}

/// Round to the nearest integer, ties toward even (used only where a
/// caller then verifies the result exactly).
inline Int round_nearest(const Rational& r) {
    Int q = num(r) / den(r);
    Rational rem = r - Rational(q);
    if (rem < 0) { q -= 1; rem += 1; }
    if (rem > Rational(1, 2)) return q + 1;
    if (rem < Rational(1, 2)) return q;
    return (q % 2 == 0) ? q : q + 1;
}

/// Decimal expansion of r with the given number of significant digits.
/// Printing only; never feeds back into any exact computation.
std::string decimal_string(const Rational& r, unsigned sig_digits = 30);

/// Parse "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

}  // namespace stereo
