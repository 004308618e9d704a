#include "stereo/rational.hpp"

#include <sstream>

namespace stereo {

std::string decimal_string(const Rational& r, unsigned sig_digits) {
    if (r == 0) return "0";
    std::string sign = (r < 0) ? "-" : "";
    Rational a = (r < 0) ? Rational(-r) : r;

    // exponent e with 10^e <= a < 10^(e+1)
    long e = 0;
    Rational t = a;
    while (t >= 10) { t /= 10; ++e; }
    while (t < 1) { t *= 10; --e; }

    // digits = round(a * 10^(sig_digits-1-e))
    long shift = static_cast<long>(sig_digits) - 1 - e;
    Rational scaled = a;
    Int pow10 = 1;
    for (long i = 0; i < (shift >= 0 ? shift : -shift); ++i) pow10 *= 10;
    scaled = (shift >= 0) ? scaled * Rational(pow10) : scaled / Rational(pow10);
    Int digits = round_nearest(scaled);
    std::string ds = digits.str();
    if (ds.size() > sig_digits) {  // rounding carried into one more digit
        ds.pop_back();
        ++e;
    }

    std::ostringstream out;
    out << sign;
    if (e >= 0 && e < static_cast<long>(sig_digits)) {
        out << ds.substr(0, e + 1);
        std::string frac = ds.substr(e + 1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out << "." << frac;
    } else {
        out << ds.substr(0, 1);
        std::string frac = ds.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out << "." << frac;
        out << "e" << e;
    }
    return out.str();
}

Rational parse_rational(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + s + "'"); };
    if (s.empty()) bad();
    std::string t = s.front() == '+' ? s.substr(1) : s;
    if (t.empty()) bad();
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(t));
        Int p(t.substr(0, slash));
        Int q(t.substr(slash + 1));
        if (q == 0) bad();
        if (q < 0) {
            p = -p;
            q = -q;
        }
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational();  // unreachable
}

}  // namespace stereo
