#include "stereo/quadreal.hpp"

#include <sstream>

namespace stereo {

std::string QuadReal::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Rational& coeff, const char* radical) {
        if (coeff == 0) return;
        Rational c = coeff;
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (!radical) {
            out << c;
        } else if (c == 1) {
            out << radical;
        } else {
            out << c << "*" << radical;
        }
        first = false;
    };
    emit(r0_, nullptr);
    emit(r2_, "sqrt2");
    emit(r3_, "sqrt3");
    emit(r6_, "sqrt6");
    return out.str();
}

}  // namespace stereo
