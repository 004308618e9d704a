#include "stereo/kelement.hpp"

#include <sstream>
#include <stdexcept>

namespace stereo {

std::string to_string(KCase c) {
    switch (c) {
        case KCase::Q: return "Q";
        case KCase::Sqrt2Q: return "sqrt2Q";
        case KCase::QSqrtM1: return "Q(sqrt-1)";
        case KCase::QSqrtM2: return "Q(sqrt-2)";
        case KCase::QSqrtM3: return "Q(sqrt-3)";
    }
    return "?";
}

int field_discriminant(KCase c) {
    switch (c) {
        case KCase::QSqrtM1: return -1;
        case KCase::QSqrtM2: return -2;
        case KCase::QSqrtM3: return -3;
        default: throw std::invalid_argument("field_discriminant: not an imaginary quadratic case");
    }
}

bool is_imaginary(KCase c) {
    return c == KCase::QSqrtM1 || c == KCase::QSqrtM2 || c == KCase::QSqrtM3;
}

Int omega_norm(KCase field, const Int& a, const Int& b) {
    switch (field) {
        case KCase::QSqrtM1: return a * a + b * b;
        case KCase::QSqrtM2: return a * a + 2 * b * b;
        case KCase::QSqrtM3: return a * a - a * b + b * b;
        default: throw std::invalid_argument("omega_norm: not an imaginary quadratic case");
    }
}

Int OkInt::norm() const { return omega_norm(field, a, b); }

OkInt OkInt::conj() const {
    // omega^sigma is -omega for i and sqrt(-2), and -1-omega for the
    // Eisenstein generator.
    if (field == KCase::QSqrtM3) return {field, a - b, -b};
    return {field, a, -b};
}

OkInt operator+(const OkInt& x, const OkInt& y) {
    if (x.field != y.field) throw std::invalid_argument("OkInt: mixed fields");
    return {x.field, x.a + y.a, x.b + y.b};
}

OkInt operator-(const OkInt& x, const OkInt& y) {
    if (x.field != y.field) throw std::invalid_argument("OkInt: mixed fields");
    return {x.field, x.a - y.a, x.b - y.b};
}

OkInt operator*(const OkInt& x, const OkInt& y) {
    if (x.field != y.field) throw std::invalid_argument("OkInt: mixed fields");
    Int cross = x.a * y.b + x.b * y.a;
    switch (x.field) {
        case KCase::QSqrtM1: return {x.field, x.a * y.a - x.b * y.b, cross};
        case KCase::QSqrtM2: return {x.field, x.a * y.a - 2 * x.b * y.b, cross};
        case KCase::QSqrtM3:  // omega^2 = -1 - omega
            return {x.field, x.a * y.a - x.b * y.b, cross - x.b * y.b};
        default: throw std::invalid_argument("OkInt: not an imaginary quadratic case");
    }
}

QuadExt OkInt::value() const {
    int d = field_discriminant(field);
    if (field == KCase::QSqrtM3)  // a + b*(-1+sqrt-3)/2
        return QuadExt(d, Rational(2 * a - b, 2), Rational(b, 2));
    return QuadExt(d, Rational(a), Rational(b));
}

namespace {

Int round_half(const Int& n, const Int& d) {  // round(n/d), d > 0
    return round_nearest(Rational(n, d));
}

/// Exact quotient x / y; y must divide x in O_K.
OkInt exact_div(const OkInt& x, const OkInt& y) {
    OkInt t = x * y.conj();
    Int n = y.norm();
    if (t.a % n != 0 || t.b % n != 0) throw std::logic_error("OkInt exact_div: not divisible");
    return {x.field, t.a / n, t.b / n};
}

}  // namespace

OkInt gcd(OkInt x, OkInt y) {
    while (!y.is_zero()) {
        // Nearest-integer division; all three rings are norm-Euclidean
        // with coordinate rounding in the omega basis.
        OkInt t = x * y.conj();
        Int n = y.norm();
        OkInt q{x.field, round_half(t.a, n), round_half(t.b, n)};
        OkInt r = x - q * y;
        x = y;
        y = r;
    }
    return x;
}

KElement KElement::from_rational(const Rational& r) {
    KElement z;
    z.field_ = KCase::Q;
    z.p_ = num(r);
    z.q_ = den(r);
    return z;
}

KElement KElement::from_sqrt2_multiple(const Rational& t) {
    // r = sqrt2 * p1/q1 with p1, q1 coprime and q1 > 0.  Odd q1 keeps the
    // numerator with sqrt2; even q1 forces p1 odd and moves sqrt2 down.
    KElement z;
    z.field_ = KCase::Sqrt2Q;
    Int p1 = num(t), q1 = den(t);
    if (q1 % 2 == 1) {
        z.cls_ = Sqrt2Class::QOdd;
        z.p_ = p1;
        z.q_ = q1;
    } else {
        z.cls_ = Sqrt2Class::POdd;
        z.p_ = p1;
        z.q_ = q1 / 2;
    }
    return z;
}

KElement KElement::canonicalize_sqrt2_rational(const QuadExt& r) {
    if (r.d() != 2 || r.a() != 0)
        throw std::invalid_argument("not an element of sqrt2*Q");
    return from_sqrt2_multiple(r.b());
}

KElement KElement::reduce_imag_quadratic(const OkInt& alpha, const OkInt& beta) {
    if (beta.is_zero()) throw std::invalid_argument("reduce_imag_quadratic: beta = 0");
    OkInt prod = alpha * beta.conj();
    Int c = beta.norm();
    Int na = alpha.norm();
    Int g = gcd(gcd(na, c), gcd(prod.a, prod.b));
    if (g != 1)
        throw std::invalid_argument("fraction not reduced: (alpha, beta) generate a proper ideal");
    // Sanity: c | |a + b*omega|^2 and the quotient is |alpha|^2.
    Int nprod = omega_norm(alpha.field, prod.a, prod.b);
    if (nprod % c != 0 || nprod / c != na)
        throw std::logic_error("reduce_imag_quadratic: norm identity violated");
    KElement z;
    z.field_ = alpha.field;
    z.p_ = prod.a;
    z.q_ = prod.b;
    z.c_ = c;
    return z;
}

KElement KElement::from_omega_coords(KCase field, const Rational& u, const Rational& v) {
    if (!is_imaginary(field))
        throw std::invalid_argument("from_omega_coords: not an imaginary quadratic case");
    Int m = den(u) / gcd(den(u), den(v)) * den(v);  // lcm
    OkInt numer{field, num(u) * (m / den(u)), num(v) * (m / den(v))};
    OkInt denom{field, m, 0};
    OkInt g = gcd(numer, denom);
    return reduce_imag_quadratic(exact_div(numer, g), exact_div(denom, g));
}

KElement KElement::infinity(KCase c) {
    KElement z;
    z.field_ = c;
    z.infinite_ = true;
    return z;
}

QuadExt KElement::value() const {
    if (infinite_) throw std::domain_error("value() of the point at infinity");
    switch (field_) {
        case KCase::Q: return QuadExt(2, Rational(p_, q_), 0);
        case KCase::Sqrt2Q:
            if (cls_ == Sqrt2Class::QOdd) return QuadExt(2, 0, Rational(p_, q_));
            return QuadExt(2, 0, Rational(p_, 2 * q_));  // p/(sqrt2 q) = sqrt2 p/(2q)
        default: {
            int d = field_discriminant(field_);
            if (field_ == KCase::QSqrtM3)
                return QuadExt(d, Rational(2 * p_ - q_, 2 * c_), Rational(q_, 2 * c_));
            return QuadExt(d, Rational(p_, c_), Rational(q_, c_));
        }
    }
}

Int KElement::height() const {
    if (infinite_) throw std::domain_error("height of the point at infinity");
    switch (field_) {
        case KCase::Q: return q_ * q_;
        case KCase::Sqrt2Q:
            return cls_ == Sqrt2Class::QOdd ? Int(q_ * q_) : Int(2 * q_ * q_);
        default: return c_;
    }
}

KElement::Sqrt2Class KElement::sqrt2_class() const {
    if (field_ != KCase::Sqrt2Q) throw std::domain_error("sqrt2_class: wrong field");
    return cls_;
}

const Int& KElement::p() const { return p_; }
const Int& KElement::q() const { return q_; }
const Int& KElement::ia() const { return p_; }
const Int& KElement::ib() const { return q_; }
const Int& KElement::ic() const { return c_; }

Int KElement::alpha_norm() const {
    if (!is_imaginary(field_)) throw std::domain_error("alpha_norm: wrong field");
    return omega_norm(field_, p_, q_) / c_;
}

std::string KElement::str() const {
    if (infinite_) return "inf";
    std::ostringstream out;
    switch (field_) {
        case KCase::Q:
            out << p_ << "/" << q_;
            break;
        case KCase::Sqrt2Q:
            if (cls_ == Sqrt2Class::QOdd)
                out << "sqrt2*" << p_ << "/" << q_;
            else
                out << p_ << "/(sqrt2*" << q_ << ")";
            break;
        default:
            out << "(" << p_ << (q_ < 0 ? "-" : "+") << boost::multiprecision::abs(q_)
                << "*w)/" << c_;
            break;
    }
    return out.str();
}

KElement KElement::parse(KCase field, const std::string& text) {
    auto bad = [&] { throw std::invalid_argument("cannot parse K element: '" + text + "'"); };
    if (text == "inf") return infinity(field);
    try {
        switch (field) {
            case KCase::Q:
                return from_rational(parse_rational(text));
            case KCase::Sqrt2Q: {
                if (text.rfind("sqrt2*", 0) == 0)  // sqrt2*p/q
                    return from_sqrt2_multiple(parse_rational(text.substr(6)));
                auto pos = text.find("/(sqrt2*");
                if (pos == std::string::npos || text.back() != ')') bad();
                Int p(text.substr(0, pos));
                Int q(text.substr(pos + 8, text.size() - pos - 9));
                // p/(sqrt2 q) = sqrt2 * p/(2q)
                return from_sqrt2_multiple(Rational(p, 2 * q));
            }
            default: {
                // (a+b*w)/c or (a-b*w)/c
                if (text.empty() || text.front() != '(') bad();
                auto close = text.find("*w)/");
                if (close == std::string::npos) bad();
                std::string inner = text.substr(1, close - 1);
                auto sep = inner.find_last_of("+-");
                if (sep == std::string::npos || sep == 0) {
                    // allow a leading sign on 'a' only when a separator exists later
                    bad();
                }
                Rational a = parse_rational(inner.substr(0, sep));
                Rational b = parse_rational(inner.substr(sep));  // includes sign
                Rational c = parse_rational(text.substr(close + 4));
                if (c <= 0) bad();
                return from_omega_coords(field, a / c, b / c);
            }
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        bad();
    }
    return KElement();  // unreachable
}

}  // namespace stereo
