#pragma once

/**
 * Rational interval arithmetic with certified enclosures.
 *
 * Endpoints are exact rationals, so interval operations introduce no
 * rounding at all; width grows only where an irrational enters (square
 * root enclosures), and those tighten on demand.
 */

#include "stereo/rational.hpp"

#include <stdexcept>

namespace stereo {

struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rational v) : lo(v), hi(v) {}
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
    }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool strictly_positive() const { return lo > 0; }
    bool strictly_negative() const { return hi < 0; }

    friend RatInterval operator+(const RatInterval& x, const RatInterval& y) {
        return {x.lo + y.lo, x.hi + y.hi};
    }
    friend RatInterval operator-(const RatInterval& x, const RatInterval& y) {
        return {x.lo - y.hi, x.hi - y.lo};
    }
    RatInterval operator-() const { return {-hi, -lo}; }
    friend RatInterval operator*(const RatInterval& x, const RatInterval& y) {
        Rational a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
        Rational lo = a, hi = a;
        for (const Rational& v : {b, c, d}) {
            if (v < lo) lo = v;
            if (v > hi) hi = v;
        }
        return {lo, hi};
    }
    /// Reciprocal; the interval must not contain zero.
    RatInterval inv() const {
        if (lo <= 0 && hi >= 0) throw std::domain_error("RatInterval: reciprocal of interval containing zero");
        return {Rational(1) / hi, Rational(1) / lo};
    }
    friend RatInterval operator/(const RatInterval& x, const RatInterval& y) { return x * y.inv(); }

    friend RatInterval hull(const RatInterval& x, const RatInterval& y) {
        return {x.lo < y.lo ? x.lo : y.lo, x.hi > y.hi ? x.hi : y.hi};
    }
};

/// Enclosure of sqrt(x) with width at most 2^-prec_bits; x >= 0.
inline RatInterval sqrt_interval(const Rational& x, unsigned prec_bits) {
    if (x < 0) throw std::domain_error("sqrt_interval of negative value");
    if (x == 0) return RatInterval(Rational(0));
    Int scale = Int(1) << prec_bits;
    // floor(sqrt(x * 4^prec)) / 2^prec <= sqrt(x) <= (floor+1)/2^prec
    Rational scaled = x * Rational(scale * scale);
    Int s = isqrt(num(scaled) / den(scaled));
    return {Rational(s, scale), Rational(s + 1, scale)};
}

/// Enclosure of sqrt over a nonnegative interval.
inline RatInterval sqrt_interval(const RatInterval& x, unsigned prec_bits) {
    return {sqrt_interval(x.lo, prec_bits).lo, sqrt_interval(x.hi, prec_bits).hi};
}

}  // namespace stereo
