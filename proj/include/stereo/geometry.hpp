#pragma once

/**
 * The stereographic correspondence Phi = Psi . phi between a boundary
 * field K and the rational points of its sphere, together with exact
 * verification of the two conditions that drive the Lagrange-number
 * transfer.
 */

#include "stereo/kelement.hpp"
#include "stereo/space.hpp"
#include "stereo/spherepoint.hpp"

namespace stereo {

/// Reflection in the auxiliary sphere of radius sqrt(2RD) centered at n:
/// Psi(x) = n + 2RD (x - n)/|x - n|^2.  Throws when x = n.
RealVec reflect_in_sphere(const RealVec& x, const SpaceSpec& spec);
RatVec reflect_in_sphere(const RatVec& x, const SpaceSpec& spec);

/// The affine chart phi of the case, evaluated at a finite K element.
/// The image is a rational point of the plane P.
RatVec phi_plane(const KElement& z, SpaceCase space);

/// Phi itself.  The point at infinity maps to the base point n when
/// allow_infinity is set, and is rejected otherwise.
SpherePoint map_to_sphere(const KElement& z, SpaceCase space, bool allow_infinity = false);

/// Phi^{-1}.  The base point n maps to the point at infinity when
/// allow_infinity is set, and is rejected otherwise.
KElement unmap(const SpherePoint& P, bool allow_infinity = false);

/// Closed-form sphere height of Phi(z) straight from the case formulas
/// (x^2 - sqrt2 xy + y^2, p^2 + q^2 - pq, |alpha|^2 + |beta|^2 - ...).
Int closed_form_height(const KElement& z, SpaceCase space);

/// Sphere height of Phi^{-1}(P)'s preimage read off the coordinates of P
/// as in the figure captions (c - b, c - (a+b)/2, a + b, d - c, 2d - b - c,
/// a + b + c), evaluated on the primitive integer tuple.
Int caption_boundary_height(const SpherePoint& P);

struct PhiConditionReport {
    bool phi_i_holds = false;   // |phi(z1) - phi(z2)|^2 == C^2 |z1 - z2|^2
    bool phi_ii_holds = false;  // H(Phi(z))/H_K(z) == |phi(z) - n|^2 / (2RD), both points
    Rational lhs_i, rhs_i;      // witnesses (squared quantities)
    Rational lhs_ii_z1, rhs_ii_z1;
    Rational lhs_ii_z2, rhs_ii_z2;
};

/// Exact check of the two Main-Lemma conditions on a pair of K points.
PhiConditionReport verify_phi_conditions(SpaceCase space, const KElement& z1, const KElement& z2);

/// |Psi(x) - Psi(y)|^2 via the chordal-metric identity
/// (2RD)^2 |x - y|^2 / (|x - n|^2 |y - n|^2).
Rational chordal_distance_sq(const RatVec& x, const RatVec& y, const SpaceSpec& spec);

/// Squared Euclidean distance between two finite K elements, as boundary
/// values (|z - w|^2 in R or C).
Rational boundary_distance_sq(const KElement& z, const KElement& w);

}  // namespace stereo
