#pragma once

/**
 * QuadExt: exact element a + b*sqrt(d) of a quadratic extension of Q,
 * for d in {2, -1, -2, -3}.  This is the universal scalar of the
 * library: sqrt(2) for the real boundary field sqrt(2)*Q, and
 * i, sqrt(-2), sqrt(-3) for the three imaginary quadratic fields.
 *
 * Arithmetic is closed and exact.  Binary operations require matching d
 * and throw on a mismatch; division by zero throws.
 */

#include "stereo/rational.hpp"

#include <stdexcept>

namespace stereo {

class QuadExt {
public:
    QuadExt(int d, Rational a, Rational b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
        if (d != 2 && d != -1 && d != -2 && d != -3)
            throw std::invalid_argument("QuadExt: unsupported discriminant");
    }
    static QuadExt rational(int d, Rational a) { return QuadExt(d, std::move(a), 0); }
    static QuadExt sqrt_d(int d) { return QuadExt(d, 0, 1); }

    int d() const { return d_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadExt conj() const { return QuadExt(d_, a_, -b_); }

    /// Field norm a^2 - d*b^2.  For d < 0 this equals |a + b*sqrt(d)|^2.
    Rational norm() const { return a_ * a_ - d_ * b_ * b_; }

    /// Squared complex modulus; only meaningful for imaginary d.
    Rational abs_sq() const {
        if (d_ > 0) throw std::domain_error("abs_sq requires imaginary discriminant");
        return norm();
    }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        check(x, y);
        return QuadExt(x.d_, x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        check(x, y);
        return QuadExt(x.d_, x.a_ - y.a_, x.b_ - y.b_);
    }
    QuadExt operator-() const { return QuadExt(d_, -a_, -b_); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        check(x, y);
        return QuadExt(x.d_, x.a_ * y.a_ + Rational(x.d_) * x.b_ * y.b_,
                       x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        check(x, y);
        if (y.is_zero()) throw std::domain_error("QuadExt: division by zero");
        Rational n = y.norm();
        QuadExt t = x * y.conj();
        return QuadExt(x.d_, t.a_ / n, t.b_ / n);
    }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

private:
    static void check(const QuadExt& x, const QuadExt& y) {
        if (x.d_ != y.d_)
            throw std::invalid_argument("QuadExt: mixed discriminants in binary operation");
    }
    int d_;
    Rational a_, b_;
};

}  // namespace stereo
