#pragma once

/**
 * Finite-height Diophantine approximation sweeps: best approximations of a
 * real quadratic target by boundary-field or sphere rational points,
 * a tail-supremum estimate of the Lagrange number, and the exact transfer
 * identity that links boundary and sphere approximation qualities.
 */

#include "stereo/geometry.hpp"
#include "stereo/interval.hpp"

#include <string>
#include <vector>

namespace stereo {

/// A real quadratic irrational p + q*sqrt(m) (m squarefree after
/// normalization), with certified enclosures of any requested width.
class TargetNumber {
public:
    static TargetNumber quadratic(Rational p, Rational q, Int m);
    static TargetNumber golden();                      // (1 + sqrt 5)/2
    static TargetNumber sqrt_of(const Int& m);

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }
    const Int& m() const { return m_; }

    RatInterval enclosure(unsigned prec_bits) const;
    /// Membership in a (real) boundary field, decided from the exact form.
    bool in_field(KCase field) const;
    std::string str() const;

private:
    Rational p_, q_;
    Int m_ = 1;
};

/// Where approximation happens: a real boundary field, or a 1-sphere.
struct ApproxSpace {
    bool on_sphere = false;
    KCase field = KCase::Q;       // meaningful when !on_sphere
    SpaceCase space = SpaceCase::S1_III;  // meaningful when on_sphere

    static ApproxSpace boundary(KCase field);
    static ApproxSpace sphere(SpaceCase space);
    /// The boundary field whose elements approximate (either way).
    KCase boundary_field() const;
};

struct ApproximationRecord {
    KElement z;              // the approximant as a boundary element
    Int height;              // H_K(z) on the boundary, sphere height on a sphere
    Int klass;               // sweep class: denominator q on the boundary, height on a sphere
    RatInterval distance;    // certified enclosure, strictly positive
    RatInterval quality;     // encloses 1/(height * distance)
};

/// Certified enclosures of the coordinates of Phi(target) on a 1-sphere.
std::vector<RatInterval> target_sphere_coords(const TargetNumber& target, SpaceCase space,
                                              unsigned prec_bits);

/// One record per height class up to the bound (denominator classes on the
/// boundary, heights on a sphere): the point of that class minimizing the
/// certified distance to the target.  Sorted by height.
std::vector<ApproximationRecord> best_approximations(const TargetNumber& target,
                                                     const ApproxSpace& where,
                                                     const Int& height_bound);

/// Tail-supremum proxy for the Lagrange number: the supremum of quality
/// over records with sweep class in (bound/2, bound], padded by 4/bound on
/// both sides.  An estimate of the limsup, not a certification of it.
RatInterval estimate_lagrange(const TargetNumber& target, const ApproxSpace& where,
                              const Int& height_bound);

/// Exact check of the square of the identity
///   H(Phi(z)) |Phi(w) - Phi(z)| / (H_K(z) |w - z|) = C |phi(z)-n| / |phi(w)-n|.
/// Returns the common squared value; throws invariant_violation on mismatch.
Rational transfer_identity_check(SpaceCase space, const KElement& z, const KElement& w);

}  // namespace stereo
