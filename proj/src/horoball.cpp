#include "stereo/horoball.hpp"

#include "stereo/errors.hpp"

#include <stdexcept>

namespace stereo {

Rational ford_radius_boundary(const KElement& z) {
    if (z.is_infinity())
        throw std::invalid_argument("ford_radius_boundary: infinity has no Ford ball radius");
    return Rational(1, 2 * z.height());
}

QuadReal lemma_horo_radius(const QuadReal& r, const RatVec& p, const SpaceSpec& spec) {
    if (r.sign() <= 0) throw std::invalid_argument("lemma_horo_radius: radius must be positive");
    RatVec dn = sub(p, spec.base_point);
    QuadReal denom = QuadReal(dot(dn, dn)) + QuadReal(2) * r * spec.D;
    return QuadReal(2 * spec.RD) * r / denom;
}

QuadReal lemma_horo_radius(const KElement& z, SpaceCase space) {
    const SpaceSpec& spec = space_spec(space);
    // Ford radius carried through the similarity phi, which dilates by C.
    QuadReal r = spec.C * QuadReal(ford_radius_boundary(z));
    return lemma_horo_radius(r, phi_plane(z, space), spec);
}

Horoball horoball_on_sphere(const KElement& z, SpaceCase space) {
    Horoball ball = horoball_at(map_to_sphere(z, space, /*allow_infinity=*/true));
    if (!z.is_infinity() && lemma_horo_radius(z, space) != ball.radius)
        throw invariant_violation("horoball radius: closed form disagrees with the transfer formula");
    return ball;
}

Horoball horoball_at(const SpherePoint& P) {
    const SpaceSpec& spec = space_spec(P.space);
    QuadReal two_r_over_c = QuadReal(2) * spec.R / spec.C;
    QuadReal rho = spec.R / (QuadReal(1) + two_r_over_c * QuadReal(Rational(P.height())));
    QuadReal shrink = QuadReal(1) - rho / spec.R;
    RealVec z = to_real(P.coords());
    RealVec c = to_real(spec.center);
    RealVec center(z.size());
    for (size_t i = 0; i < z.size(); ++i) center[i] = c[i] + shrink * (z[i] - c[i]);
    return Horoball{P.space, P, std::move(center), std::move(rho)};
}

Int tangency_form(const SpherePoint& P1, const SpherePoint& P2) {
    if (P1.space != P2.space)
        throw std::invalid_argument("tangency_form: points on different spheres");
    Int pp = 0;
    for (size_t i = 0; i < P1.p.size(); ++i) pp += P1.p[i] * P2.p[i];
    Int qq = P1.q * P2.q;
    switch (P1.space) {
        case SpaceCase::S1_I: return pp - qq;
        case SpaceCase::S1_II: return pp - 2 * qq;
        case SpaceCase::S1_III: return qq - pp;
        case SpaceCase::S2_I: return pp - qq;
        case SpaceCase::S2_II: return pp - 2 * qq;
        case SpaceCase::S2_III: return qq - pp;
    }
    throw std::logic_error("unreachable");
}

Int tangency_target(SpaceCase space) {
    switch (space) {
        case SpaceCase::S1_I: return -1;
        case SpaceCase::S1_II: return -2;
        case SpaceCase::S1_III: return 1;
        case SpaceCase::S2_I: return -1;
        case SpaceCase::S2_II: return -1;
        case SpaceCase::S2_III: return 1;
    }
    throw std::logic_error("unreachable");
}

bool form_says_tangent(const SpherePoint& P1, const SpherePoint& P2) {
    return tangency_form(P1, P2) == tangency_target(P1.space);
}

ContactCertificate verify_tangent_or_disjoint(const Horoball& b1, const Horoball& b2) {
    if (b1.space != b2.space)
        throw std::invalid_argument("verify_tangent_or_disjoint: different spheres");
    if (b1.point == b2.point)
        throw std::invalid_argument("verify_tangent_or_disjoint: same tangency point");
    ContactCertificate cert;
    RealVec d = sub(b1.center, b2.center);
    QuadReal sum = b1.radius + b2.radius;
    cert.gap = dot(d, d) - sum * sum;
    cert.form_value = tangency_form(b1.point, b2.point);
    cert.form_target = tangency_target(b1.space);
    int s = cert.gap.sign();
    if (s < 0) throw invariant_violation("horoballs overlap: " + b1.point.str() + " vs " + b2.point.str());
    cert.tangent = (s == 0);
    if (cert.tangent != (cert.form_value == cert.form_target))
        throw invariant_violation("tangency form disagrees with the geometric verdict: " +
                                  b1.point.str() + " vs " + b2.point.str());
    return cert;
}

ContactCertificate verify_tangent_or_disjoint(const SpherePoint& P1, const SpherePoint& P2) {
    return verify_tangent_or_disjoint(horoball_at(P1), horoball_at(P2));
}

}  // namespace stereo
