#include "stereo/spectrum.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stereo {

SpectrumValue SpectrumValue::make(Rational r, Rational s, Int m, std::string generator,
                                  std::string verbatim) {
    if (m < 1) throw std::invalid_argument("SpectrumValue: radicand must be positive");
    Int root;
    if (perfect_square(m, &root)) {
        r += s * Rational(root);
        s = 0;
    }
    if (s == 0) m = 1;
    SpectrumValue v;
    v.sq_r = std::move(r);
    v.sq_s = std::move(s);
    v.m = std::move(m);
    v.generator = std::move(generator);
    v.verbatim = std::move(verbatim);
    if (!v.square_enclosure(64).strictly_positive() && !(v.sq_r == 0 && v.sq_s == 0))
        throw std::invalid_argument("SpectrumValue: square is not positive");
    return v;
}

RatInterval SpectrumValue::square_enclosure(unsigned prec_bits) const {
    RatInterval sq(sq_r);
    if (sq_s != 0) sq = sq + RatInterval(sq_s) * sqrt_interval(Rational(m), prec_bits);
    return sq;
}

RatInterval SpectrumValue::value_enclosure(unsigned prec_bits) const {
    RatInterval sq = square_enclosure(prec_bits);
    if (sq.lo < 0) sq.lo = 0;
    return sqrt_interval(sq, prec_bits);
}

std::string SpectrumValue::square_str() const {
    std::ostringstream out;
    if (sq_s == 0) {
        out << sq_r;
    } else {
        bool have_r = sq_r != 0;
        if (have_r) out << sq_r << (sq_s > 0 ? " + " : " - ");
        Rational s = sq_s;
        if (!have_r && s < 0) out << "-";
        if (s < 0) s = -s;
        if (s != 1) out << "(" << s << ")*";
        out << "sqrt(" << m << ")";
    }
    return out.str();
}

std::string SpectrumValue::exact_str() const { return "sqrt(" + square_str() + ")"; }

std::string SpectrumValue::decimal(unsigned sig_digits) const {
    // 8 extra bits per digit comfortably dominate the decimal precision.
    unsigned prec = 32 + 8 * sig_digits;
    return decimal_string(value_enclosure(prec).mid(), sig_digits);
}

bool spectrum_less(const SpectrumValue& a, const SpectrumValue& b) {
    if (a == b) return false;
    // Distinct canonical squares are distinct reals, so refinement ends.
    for (unsigned prec = 64; prec <= 1u << 14; prec *= 2) {
        RatInterval x = a.square_enclosure(prec), y = b.square_enclosure(prec);
        if (x.hi < y.lo) return true;
        if (y.hi < x.lo) return false;
    }
    throw std::logic_error("spectrum_less: failed to separate distinct values");
}

std::vector<SpectrumValue> generated_spectrum(SpaceCase space, const Int& bound) {
    std::vector<SpectrumValue> out;
    if (space == SpaceCase::S1_I) {
        for (const Int& x : markoff_x_values(bound))
            out.push_back(SpectrumValue::make(4 - Rational(1, x * x), 0, 1,
                                              "x=" + x.str()));
        for (const Int& y : markoff_y_values(bound))
            out.push_back(SpectrumValue::make(4 - Rational(2, y * y), 0, 1,
                                              "y=" + y.str()));
    } else if (space == SpaceCase::S2_I) {
        for (const Int& x : markoff_x_values(bound))
            out.push_back(SpectrumValue::make(2 - Rational(1, 2 * x * x), 0, 1,
                                              "x=" + x.str()));
        out.push_back(SpectrumValue::make(0, Rational(3, 10), 41, "sporadic"));
    } else {
        throw std::invalid_argument("only cited constants available");
    }
    std::sort(out.begin(), out.end(), spectrum_less);
    return out;
}

std::vector<SpectrumValue> cited_constants(SpaceCase space) {
    switch (space) {
        case SpaceCase::S1_I:
            return {SpectrumValue::make(4, 0, 1, "cited: smallest accumulation point")};
        case SpaceCase::S1_II:
        case SpaceCase::S1_III:
            return {};
        case SpaceCase::S2_I:
            return {SpectrumValue::make(2, 0, 1, "cited: smallest limit point")};
        case SpaceCase::S2_II:
            return {SpectrumValue::make(1, 0, 1, "cited: minimum"),
                    SpectrumValue::make(Rational(Int(4) * 82662667, Int(405186721)),
                                        Rational(Int(4) * 11577720, Int(405186721)), 47,
                                        "cited: smallest limit point",
                                        "(4(82 662 667 + 115 77720 sqrt(47)) / 405 186 721)^(1/2)")};
        case SpaceCase::S2_III:
            return {SpectrumValue::make(0, Rational(1, 2), 13, "cited: minimum"),
                    SpectrumValue::make(Rational(14, 13), Rational(8, 13), 3,
                                        "cited: smallest limit point")};
    }
    throw std::logic_error("unreachable");
}

std::vector<SpectrumValue> discrete_spectrum(SpaceCase space, const Int& bound) {
    if (space == SpaceCase::S1_I || space == SpaceCase::S2_I)
        return generated_spectrum(space, bound);
    std::vector<SpectrumValue> out = cited_constants(space);
    std::sort(out.begin(), out.end(), spectrum_less);
    return out;
}

std::string spectrum_csv(SpaceCase space, const std::vector<SpectrumValue>& values) {
    std::ostringstream out;
    out << "value_sq,value,generator,case\n";
    for (const auto& v : values)
        out << v.square_str() << "," << v.decimal(30) << ","
            << v.generator << "," << to_string(space) << "\n";
    return out.str();
}

}  // namespace stereo
