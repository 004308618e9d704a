#pragma once

/**
 * QuadReal: exact element of the real biquadratic field Q(sqrt2, sqrt3),
 * stored as r0 + r2*sqrt2 + r3*sqrt3 + r6*sqrt6 with rational coefficients.
 *
 * All six sphere geometries live here: the radii R, the distances D, the
 * dilation factors C, horoball radii and centers are all elements of this
 * field, so tangent-versus-disjoint verdicts reduce to exact sign tests.
 */

#include "stereo/interval.hpp"
#include "stereo/rational.hpp"

#include <stdexcept>
#include <string>

namespace stereo {

class QuadReal {
public:
    QuadReal() : r0_(0), r2_(0), r3_(0), r6_(0) {}
    QuadReal(Rational rational) : r0_(std::move(rational)), r2_(0), r3_(0), r6_(0) {}
    QuadReal(Rational r0, Rational r2, Rational r3, Rational r6)
        : r0_(std::move(r0)), r2_(std::move(r2)), r3_(std::move(r3)), r6_(std::move(r6)) {}

    static QuadReal sqrt2() { return {0, 1, 0, 0}; }
    static QuadReal sqrt3() { return {0, 0, 1, 0}; }
    static QuadReal sqrt6() { return {0, 0, 0, 1}; }

    const Rational& r0() const { return r0_; }
    const Rational& r2() const { return r2_; }
    const Rational& r3() const { return r3_; }
    const Rational& r6() const { return r6_; }

    bool is_zero() const { return r0_ == 0 && r2_ == 0 && r3_ == 0 && r6_ == 0; }
    bool is_rational() const { return r2_ == 0 && r3_ == 0 && r6_ == 0; }
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("QuadReal value is irrational");
        return r0_;
    }

    // Galois conjugations: sigma2 flips sqrt2, sigma3 flips sqrt3.
    QuadReal sigma2() const { return {r0_, -r2_, r3_, -r6_}; }
    QuadReal sigma3() const { return {r0_, r2_, -r3_, -r6_}; }

    friend QuadReal operator+(const QuadReal& x, const QuadReal& y) {
        return {x.r0_ + y.r0_, x.r2_ + y.r2_, x.r3_ + y.r3_, x.r6_ + y.r6_};
    }
    friend QuadReal operator-(const QuadReal& x, const QuadReal& y) {
        return {x.r0_ - y.r0_, x.r2_ - y.r2_, x.r3_ - y.r3_, x.r6_ - y.r6_};
    }
    QuadReal operator-() const { return {-r0_, -r2_, -r3_, -r6_}; }
    friend QuadReal operator*(const QuadReal& x, const QuadReal& y) {
        return {x.r0_ * y.r0_ + 2 * x.r2_ * y.r2_ + 3 * x.r3_ * y.r3_ + 6 * x.r6_ * y.r6_,
                x.r0_ * y.r2_ + x.r2_ * y.r0_ + 3 * (x.r3_ * y.r6_ + x.r6_ * y.r3_),
                x.r0_ * y.r3_ + x.r3_ * y.r0_ + 2 * (x.r2_ * y.r6_ + x.r6_ * y.r2_),
                x.r0_ * y.r6_ + x.r6_ * y.r0_ + x.r2_ * y.r3_ + x.r3_ * y.r2_};
    }
    friend QuadReal operator/(const QuadReal& x, const QuadReal& y) {
        if (y.is_zero()) throw std::domain_error("QuadReal: division by zero");
        // Multiply through by the three nontrivial conjugates; the full
        // norm y * s2(y) * s3(y) * s2(s3(y)) is rational.
        QuadReal c = y.sigma2() * y.sigma3() * y.sigma2().sigma3();
        QuadReal n = (y * c);
        return x * c * QuadReal(Rational(1) / n.rational_value());
    }
    friend bool operator==(const QuadReal& x, const QuadReal& y) {
        return x.r0_ == y.r0_ && x.r2_ == y.r2_ && x.r3_ == y.r3_ && x.r6_ == y.r6_;
    }
    friend bool operator!=(const QuadReal& x, const QuadReal& y) { return !(x == y); }

    /// Certified enclosure; width shrinks as prec_bits grows.
    RatInterval enclosure(unsigned prec_bits) const {
        RatInterval v(r0_);
        auto add = [&](const Rational& coeff, int n) {
            if (coeff == 0) return;
            v = v + RatInterval(coeff) * sqrt_interval(Rational(n), prec_bits);
        };
        add(r2_, 2);
        add(r3_, 3);
        add(r6_, 6);
        return v;
    }

    /// Exact sign: -1, 0, or +1.
    int sign() const {
        if (is_zero()) return 0;
        for (unsigned prec = 32;; prec *= 2) {
            RatInterval v = enclosure(prec);
            if (v.strictly_positive()) return 1;
            if (v.strictly_negative()) return -1;
            if (prec > 4096)
                throw std::logic_error("QuadReal::sign failed to separate nonzero value");
        }
    }

    friend bool operator<(const QuadReal& x, const QuadReal& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadReal& x, const QuadReal& y) { return (x - y).sign() > 0; }

    /// Human-readable exact form, e.g. "1/2 + 3*sqrt2".
    std::string str() const;

private:
    Rational r0_, r2_, r3_, r6_;
};

}  // namespace stereo
