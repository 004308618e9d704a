#include "stereo/geometry.hpp"

#include <stdexcept>

namespace stereo {

namespace {

void check_field(const KElement& z, const SpaceSpec& spec) {
    if (z.field() != spec.boundary_field)
        throw std::invalid_argument("K element field does not match the space case");
}

/// For z in sqrt2*Q, the rational number sqrt2 * z.
Rational sqrt2_times(const KElement& z) {
    if (z.sqrt2_class() == KElement::Sqrt2Class::QOdd)
        return Rational(2 * z.p(), z.q());       // sqrt2 * sqrt2 p/q
    return Rational(z.p(), z.q());               // sqrt2 * p/(sqrt2 q)
}

/// Omega-basis coordinates (u, v) of an imaginary quadratic element.
std::pair<Rational, Rational> omega_coords(const KElement& z) {
    return {Rational(z.ia(), z.ic()), Rational(z.ib(), z.ic())};
}

}  // namespace

RatVec reflect_in_sphere(const RatVec& x, const SpaceSpec& spec) {
    RatVec diff = sub(x, spec.base_point);
    Rational nsq = dot(diff, diff);
    if (nsq == 0) throw std::domain_error("reflection undefined at base point");
    Rational scale = 2 * spec.RD / nsq;
    RatVec out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = spec.base_point[i] + scale * diff[i];
    return out;
}

RealVec reflect_in_sphere(const RealVec& x, const SpaceSpec& spec) {
    RealVec n = to_real(spec.base_point);
    RealVec diff = sub(x, n);
    QuadReal nsq = dot(diff, diff);
    if (nsq.is_zero()) throw std::domain_error("reflection undefined at base point");
    QuadReal scale = QuadReal(2 * spec.RD) / nsq;
    RealVec out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = n[i] + scale * diff[i];
    return out;
}

RatVec phi_plane(const KElement& z, SpaceCase space) {
    const SpaceSpec& spec = space_spec(space);
    check_field(z, spec);
    if (z.is_infinity()) throw std::invalid_argument("phi is not defined at infinity");
    switch (space) {
        case SpaceCase::S1_I: {
            Rational s = sqrt2_times(z);         // sqrt2 * t
            return {s - 1, Rational(0)};
        }
        case SpaceCase::S1_II: {
            Rational s = sqrt2_times(z);
            return {s - 1, 1 - s};
        }
        case SpaceCase::S1_III: {
            Rational t(z.p(), z.q());
            return {t, 1 - t, Rational(0)};
        }
        case SpaceCase::S2_I: {
            auto [u, v] = omega_coords(z);
            return {u - v, u + v - 1, Rational(0)};
        }
        case SpaceCase::S2_II: {
            auto [u, v] = omega_coords(z);
            return {1 - 2 * v, u, 1 - u};
        }
        case SpaceCase::S2_III: {
            auto [u, v] = omega_coords(z);
            return {1 - u, u - v, v, Rational(0)};
        }
    }
    throw std::logic_error("unreachable");
}

SpherePoint map_to_sphere(const KElement& z, SpaceCase space, bool allow_infinity) {
    const SpaceSpec& spec = space_spec(space);
    check_field(z, spec);
    if (z.is_infinity()) {
        if (!allow_infinity)
            throw std::invalid_argument("map_to_sphere: infinity rejected without the flag");
        return SpherePoint::from_coords(space, spec.base_point);
    }
    return SpherePoint::from_coords(space, reflect_in_sphere(phi_plane(z, space), spec));
}

KElement unmap(const SpherePoint& P, bool allow_infinity) {
    const SpaceSpec& spec = space_spec(P.space);
    RatVec coords = P.coords();
    if (coords == spec.base_point) {
        if (!allow_infinity)
            throw std::invalid_argument("unmap: base point maps to infinity");
        return KElement::infinity(spec.boundary_field);
    }
    RatVec x = reflect_in_sphere(coords, spec);
    switch (P.space) {
        case SpaceCase::S1_I:
        case SpaceCase::S1_II:
            return KElement::from_sqrt2_multiple((x[0] + 1) / 2);
        case SpaceCase::S1_III:
            return KElement::from_rational(x[0]);
        case SpaceCase::S2_I:
            return KElement::from_omega_coords(spec.boundary_field, (x[0] + x[1] + 1) / 2,
                                               (x[1] + 1 - x[0]) / 2);
        case SpaceCase::S2_II:
            return KElement::from_omega_coords(spec.boundary_field, x[1], (1 - x[0]) / 2);
        case SpaceCase::S2_III:
            return KElement::from_omega_coords(spec.boundary_field, 1 - x[0], x[2]);
    }
    throw std::logic_error("unreachable");
}

Int closed_form_height(const KElement& z, SpaceCase space) {
    check_field(z, space_spec(space));
    if (z.is_infinity()) return 1;
    switch (space) {
        case SpaceCase::S1_I:
        case SpaceCase::S1_II: {
            // x^2 - sqrt2 x y + y^2 in the two class-tagged forms.
            const Int &p = z.p(), &q = z.q();
            if (z.sqrt2_class() == KElement::Sqrt2Class::QOdd)
                return 2 * p * p - 2 * p * q + q * q;
            return p * p - 2 * p * q + 2 * q * q;
        }
        case SpaceCase::S1_III: {
            const Int &p = z.p(), &q = z.q();
            return p * p - p * q + q * q;
        }
        case SpaceCase::S2_I:
            return z.alpha_norm() + z.ic() - z.ia() - z.ib();
        case SpaceCase::S2_II:
            return z.alpha_norm() + z.ic() - z.ia() - 2 * z.ib();
        case SpaceCase::S2_III:
            return z.alpha_norm() + z.ic() - z.ia();
    }
    throw std::logic_error("unreachable");
}

Int caption_boundary_height(const SpherePoint& P) {
    const auto& p = P.p;
    switch (P.space) {
        case SpaceCase::S1_I: return P.q - p[1];
        case SpaceCase::S1_II: return (2 * P.q - p[0] - p[1]) / 2;
        case SpaceCase::S1_III: return p[0] + p[1];
        case SpaceCase::S2_I: return P.q - p[2];
        case SpaceCase::S2_II: return 2 * P.q - p[1] - p[2];
        case SpaceCase::S2_III: return p[0] + p[1] + p[2];
    }
    throw std::logic_error("unreachable");
}

Rational boundary_distance_sq(const KElement& z, const KElement& w) {
    if (z.field() != w.field()) throw std::invalid_argument("boundary_distance_sq: mixed fields");
    if (z.is_infinity() || w.is_infinity())
        throw std::invalid_argument("boundary_distance_sq: infinite operand");
    switch (z.field()) {
        case KCase::Q: {
            Rational d = Rational(z.p(), z.q()) - Rational(w.p(), w.q());
            return d * d;
        }
        case KCase::Sqrt2Q: {
            Rational ds = sqrt2_times(z) - sqrt2_times(w);  // sqrt2 * (z - w)
            return ds * ds / 2;
        }
        default:
            return (z.value() - w.value()).abs_sq();
    }
}

PhiConditionReport verify_phi_conditions(SpaceCase space, const KElement& z1, const KElement& z2) {
    const SpaceSpec& spec = space_spec(space);
    if (z1 == z2) throw std::invalid_argument("verify_phi_conditions: equal points");
    PhiConditionReport rep;

    RatVec f1 = phi_plane(z1, space), f2 = phi_plane(z2, space);
    RatVec d = sub(f1, f2);
    rep.lhs_i = dot(d, d);
    rep.rhs_i = (spec.C * spec.C).rational_value() * boundary_distance_sq(z1, z2);
    rep.phi_i_holds = rep.lhs_i == rep.rhs_i;

    auto cond_ii = [&](const KElement& z, const RatVec& f, Rational& lhs, Rational& rhs) {
        SpherePoint P = map_to_sphere(z, space);
        lhs = Rational(P.height(), z.height());
        RatVec dn = sub(f, spec.base_point);
        rhs = dot(dn, dn) / (2 * spec.RD);
        return lhs == rhs;
    };
    bool ok1 = cond_ii(z1, f1, rep.lhs_ii_z1, rep.rhs_ii_z1);
    bool ok2 = cond_ii(z2, f2, rep.lhs_ii_z2, rep.rhs_ii_z2);
    rep.phi_ii_holds = ok1 && ok2;
    return rep;
}

Rational chordal_distance_sq(const RatVec& x, const RatVec& y, const SpaceSpec& spec) {
    RatVec dxn = sub(x, spec.base_point), dyn = sub(y, spec.base_point);
    Rational nx = dot(dxn, dxn), ny = dot(dyn, dyn);
    if (nx == 0 || ny == 0) throw std::domain_error("chordal_distance_sq: point at base point");
    RatVec d = sub(x, y);
    return 4 * spec.RD * spec.RD * dot(d, d) / (nx * ny);
}

}  // namespace stereo
