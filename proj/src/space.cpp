#include "stereo/space.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace stereo {

std::string to_string(SpaceCase c) {
    switch (c) {
        case SpaceCase::S1_I: return "S1_I";
        case SpaceCase::S1_II: return "S1_II";
        case SpaceCase::S1_III: return "S1_III";
        case SpaceCase::S2_I: return "S2_I";
        case SpaceCase::S2_II: return "S2_II";
        case SpaceCase::S2_III: return "S2_III";
    }
    return "?";
}

SpaceCase parse_space_case(const std::string& s) {
    std::string t;
    for (char ch : s) {
        if (ch == '-') ch = '_';
        t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    if (t == "s1_i") return SpaceCase::S1_I;
    if (t == "s1_ii") return SpaceCase::S1_II;
    if (t == "s1_iii") return SpaceCase::S1_III;
    if (t == "s2_i") return SpaceCase::S2_I;
    if (t == "s2_ii") return SpaceCase::S2_II;
    if (t == "s2_iii") return SpaceCase::S2_III;
    throw std::invalid_argument("unknown space case: '" + s + "'");
}

bool is_circle_case(SpaceCase c) {
    return c == SpaceCase::S1_I || c == SpaceCase::S1_II || c == SpaceCase::S1_III;
}

Rational dot(const RatVec& x, const RatVec& y) {
    Rational s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

RatVec sub(const RatVec& x, const RatVec& y) {
    RatVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

QuadReal dot(const RealVec& x, const RealVec& y) {
    QuadReal s;
    for (size_t i = 0; i < x.size(); ++i) s = s + x[i] * y[i];
    return s;
}

RealVec sub(const RealVec& x, const RealVec& y) {
    RealVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

RealVec to_real(const RatVec& x) {
    RealVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = QuadReal(x[i]);
    return r;
}

namespace {

SpaceSpec make_spec(SpaceCase c) {
    const QuadReal sqrt2 = QuadReal::sqrt2();
    const QuadReal sqrt3 = QuadReal::sqrt3();
    const QuadReal sqrt6 = QuadReal::sqrt6();
    SpaceSpec s;
    s.tag = c;
    switch (c) {
        case SpaceCase::S1_I:
            s.l = 2; s.plane_W = false; s.k = 1;
            s.center = {0, 0};
            s.R = QuadReal(1);
            s.base_point = {0, 1};
            s.plane_origin = {-1, 0};
            s.D = QuadReal(1);
            s.C = sqrt2;
            s.boundary_field = KCase::Sqrt2Q;
            break;
        case SpaceCase::S1_II:
            s.l = 2; s.plane_W = false; s.k = 2;
            s.center = {0, 0};
            s.R = sqrt2;
            s.base_point = {1, 1};
            s.plane_origin = {-1, 1};
            s.D = sqrt2;
            s.C = QuadReal(2);
            s.boundary_field = KCase::Sqrt2Q;
            break;
        case SpaceCase::S1_III:
            s.l = 3; s.plane_W = true; s.k = 1;
            s.center = {Rational(1, 3), Rational(1, 3), Rational(1, 3)};
            s.R = sqrt6 * QuadReal(Rational(1, 3));      // sqrt(2/3)
            s.base_point = {0, 0, 1};
            s.plane_origin = {0, 1, 0};
            s.D = sqrt6 * QuadReal(Rational(1, 2));      // sqrt(3/2)
            s.C = sqrt2;
            s.boundary_field = KCase::Q;
            break;
        case SpaceCase::S2_I:
            s.l = 3; s.plane_W = false; s.k = 1;
            s.center = {0, 0, 0};
            s.R = QuadReal(1);
            s.base_point = {0, 0, 1};
            s.plane_origin = {0, -1, 0};
            s.D = QuadReal(1);
            s.C = sqrt2;
            s.boundary_field = KCase::QSqrtM1;
            break;
        case SpaceCase::S2_II:
            s.l = 3; s.plane_W = false; s.k = 2;
            s.center = {0, 0, 0};
            s.R = sqrt2;
            s.base_point = {0, 1, 1};
            s.plane_origin = {1, 0, 1};
            s.D = sqrt2 * QuadReal(Rational(1, 2));      // 1/sqrt2
            s.C = sqrt2;
            s.boundary_field = KCase::QSqrtM2;
            break;
        case SpaceCase::S2_III:
            s.l = 4; s.plane_W = true; s.k = 1;
            s.center = {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)};
            s.R = sqrt3 * QuadReal(Rational(1, 2));      // sqrt3/2
            s.base_point = {0, 0, 0, 1};
            s.plane_origin = {1, 0, 0, 0};
            s.D = sqrt3 * QuadReal(Rational(2, 3));      // 2/sqrt3
            s.C = sqrt2;
            s.boundary_field = KCase::QSqrtM3;
            break;
    }
    s.plane_normal = sub(s.base_point, s.center);

    // Construction-time invariants.
    QuadReal rd = s.R * s.D;
    if (!rd.is_rational()) throw std::logic_error("SpaceSpec: R*D not rational");
    s.RD = rd.rational_value();
    RatVec nc = sub(s.base_point, s.center);
    if (QuadReal(dot(nc, nc)) != s.R * s.R)
        throw std::logic_error("SpaceSpec: base point not on the sphere");
    // n - c has length R, so this dot product is R*D exactly.
    if (dot(sub(s.base_point, s.plane_origin), s.plane_normal) != s.RD)
        throw std::logic_error("SpaceSpec: plane distance inconsistent with D");
    if (s.plane_W) {
        auto on_W = [](const RatVec& v) {
            Rational sum = 0;
            for (const auto& x : v) sum += x;
            return sum == 1;
        };
        if (!on_W(s.center) || !on_W(s.base_point) || !on_W(s.plane_origin))
            throw std::logic_error("SpaceSpec: data off the plane W");
    }
    return s;
}

}  // namespace

const SpaceSpec& space_spec(SpaceCase c) {
    static const std::array<SpaceSpec, 6> specs = {
        make_spec(SpaceCase::S1_I),  make_spec(SpaceCase::S1_II),
        make_spec(SpaceCase::S1_III), make_spec(SpaceCase::S2_I),
        make_spec(SpaceCase::S2_II), make_spec(SpaceCase::S2_III)};
    return specs[static_cast<size_t>(c)];
}

}  // namespace stereo
