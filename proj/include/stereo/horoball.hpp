#pragma once

/**
 * Horoballs tangent to the sphere at its rational points: the images under
 * Psi of the Ford balls of the boundary field.  All centers and radii are
 * exact elements of Q(sqrt2, sqrt3), so the pairwise tangent-or-disjoint
 * dichotomy is decided by exact sign tests, never by floating point.
 */

#include "stereo/geometry.hpp"

namespace stereo {

struct Horoball {
    SpaceCase space;
    SpherePoint point;   // tangency point on the sphere
    RealVec center;
    QuadReal radius;
};

/// Radius of the Ford ball of the boundary field at a finite element:
/// 1 / (2 H_K).
Rational ford_radius_boundary(const KElement& z);

/// Image under Psi of a ball of radius r tangent to the plane at p:
/// rho = 2 r R D / (|p - n|^2 + 2 r D).
QuadReal lemma_horo_radius(const QuadReal& r, const RatVec& p, const SpaceSpec& spec);

/// The lemma composition for the Ford ball of z, whose plane radius is the
/// boundary Ford radius scaled by the dilation C.
QuadReal lemma_horo_radius(const KElement& z, SpaceCase space);

/// The horoball tangent at Phi(z).  Uses the closed form
/// rho = R / (1 + (2R/C) H) and, for finite z, cross-checks it against
/// lemma_horo_radius.  Infinity gives the ball tangent at the base point.
Horoball horoball_on_sphere(const KElement& z, SpaceCase space);

/// Same ball addressed by its sphere point.
Horoball horoball_at(const SpherePoint& P);

/// The integer bilinear form whose value decides tangency of the two
/// horoballs from the primitive tuples alone.
Int tangency_form(const SpherePoint& P1, const SpherePoint& P2);

/// Value of the form at which two horoballs are tangent; interiors are
/// disjoint exactly when the form is on the far side of this target.
Int tangency_target(SpaceCase space);

/// Whether the form says "tangent" for the pair.
bool form_says_tangent(const SpherePoint& P1, const SpherePoint& P2);

struct ContactCertificate {
    bool tangent = false;            // false means strictly disjoint
    QuadReal gap;                    // |c1 - c2|^2 - (rho1 + rho2)^2, exactly
    Int form_value = 0;              // the bilinear form on the tuples
    Int form_target = 0;
};

/// Exact geometric verdict for a pair of horoballs.  Throws
/// invariant_violation if the balls overlap, which should be impossible.
/// Also cross-checks the verdict against the tangency form.
ContactCertificate verify_tangent_or_disjoint(const Horoball& b1, const Horoball& b2);
ContactCertificate verify_tangent_or_disjoint(const SpherePoint& P1, const SpherePoint& P2);

}  // namespace stereo
