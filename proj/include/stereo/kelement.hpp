#pragma once

/**
 * Canonical reduced representations of the rational points of the five
 * boundary fields:
 *
 *   Q            reduced fraction p/q, q >= 1
 *   sqrt2*Q      either sqrt2*p/q with q odd, or p/(sqrt2*q) with p odd,
 *                with p, q coprime and q > 0
 *   Q(sqrt -1),
 *   Q(sqrt -2),
 *   Q(sqrt -3)   integer triple (a, b, c) with r = (a + b*w)/c, c = |beta|^2,
 *                derived from a reduced fraction alpha/beta in O_K
 *
 * plus a distinguished point at infinity (the preimage of the projection
 * base point n).  Each element carries its height.
 */

#include "stereo/quadext.hpp"
#include "stereo/rational.hpp"

#include <compare>
#include <string>

namespace stereo {

enum class KCase { Q, Sqrt2Q, QSqrtM1, QSqrtM2, QSqrtM3 };

std::string to_string(KCase c);

/// Discriminant of the imaginary quadratic field (-1, -2 or -3).
int field_discriminant(KCase c);
bool is_imaginary(KCase c);

/// Integer of O_K in the omega-basis: a + b*omega, where omega is
/// i, sqrt(-2) or (-1+sqrt(-3))/2 depending on the field.
struct OkInt {
    KCase field;
    Int a, b;

    bool is_zero() const { return a == 0 && b == 0; }
    Int norm() const;
    OkInt conj() const;

    friend OkInt operator+(const OkInt& x, const OkInt& y);
    friend OkInt operator-(const OkInt& x, const OkInt& y);
    friend OkInt operator*(const OkInt& x, const OkInt& y);
    friend bool operator==(const OkInt& x, const OkInt& y) = default;

    /// Value as an exact complex number a' + b'*sqrt(d).
    QuadExt value() const;
};

/// Euclidean gcd in O_K (all three fields are norm-Euclidean).
OkInt gcd(OkInt x, OkInt y);

class KElement {
public:
    /// The usual reduced fraction p/q.
    static KElement from_rational(const Rational& r);

    /// r = sqrt2 * t for rational t, put in the unique class-tagged form.
    static KElement from_sqrt2_multiple(const Rational& t);

    /// Element (u + v*omega) of an imaginary quadratic field, reduced.
    static KElement from_omega_coords(KCase field, const Rational& u, const Rational& v);

    /// Reduced fraction alpha/beta in O_K; throws if beta = 0 or the pair
    /// generates a proper ideal (detected through gcd(|a|^2,|b|^2,a,b) > 1).
    static KElement reduce_imag_quadratic(const OkInt& alpha, const OkInt& beta);

    static KElement infinity(KCase c);

    /// Canonicalize a value of sqrt2*Q given as a QuadExt with d = 2;
    /// the rational part must vanish.
    static KElement canonicalize_sqrt2_rational(const QuadExt& r);

    /// Exact value as a QuadExt: d = 2 for the real cases (rational values
    /// are embedded with b = 0), d < 0 for the imaginary cases.
    QuadExt value() const;

    /// H_K: q^2 for Q; q^2 or 2q^2 for sqrt2*Q; c = |beta|^2 for imaginary.
    Int height() const;

    KCase field() const { return field_; }
    bool is_infinity() const { return infinite_; }

    // Case-specific canonical data.
    enum class Sqrt2Class { QOdd, POdd };  // sqrt2*p/q (q odd) vs p/(sqrt2*q) (p odd)
    Sqrt2Class sqrt2_class() const;
    const Int& p() const;               // Q and sqrt2*Q cases
    const Int& q() const;
    const Int& ia() const;              // imaginary cases: (a + b*omega)/c
    const Int& ib() const;
    const Int& ic() const;
    /// |alpha|^2 = |a + b*omega|^2 / c (Lemma quantity for the imaginary cases).
    Int alpha_norm() const;

    std::string str() const;
    static KElement parse(KCase field, const std::string& text);

    friend bool operator==(const KElement& x, const KElement& y) = default;
    friend std::weak_ordering operator<=>(const KElement& x, const KElement& y) = default;

private:
    KElement() = default;
    KCase field_ = KCase::Q;
    bool infinite_ = false;
    Sqrt2Class cls_ = Sqrt2Class::QOdd;
    // p_/q_ doubles as (a, b) with c_ for the imaginary cases.
    Int p_ = 0, q_ = 1, c_ = 1;
};

/// |omega|^2-form of an omega-basis pair: a^2 + b^2, a^2 + 2b^2 or a^2 - ab + b^2.
Int omega_norm(KCase field, const Int& a, const Int& b);

}  // namespace stereo
