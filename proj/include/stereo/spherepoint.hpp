#pragma once

/**
 * A rational point of one of the six spheres in primitive integer form
 * p/q: gcd of the coordinates is 1, q > 0, p.p = k q^2, and for the III
 * cases the plane constraint sum(p) = q holds.  The height is q.
 */

#include "stereo/space.hpp"

#include <compare>
#include <string>
#include <vector>

namespace stereo {

struct SpherePoint {
    SpaceCase space;
    std::vector<Int> p;
    Int q;

    /// Canonicalize a rational vector known to lie on the sphere;
    /// verifies primitivity, the sphere equation and the W constraint.
    static SpherePoint from_coords(SpaceCase space, const RatVec& coords);

    Int height() const { return q; }
    RatVec coords() const;

    std::string str() const;                       // "(p1,...,pl)/q"
    static SpherePoint parse(SpaceCase space, const std::string& text);
    std::string json() const;                      // {case, p, q, height}

    friend bool operator==(const SpherePoint& x, const SpherePoint& y) = default;
    friend std::weak_ordering operator<=>(const SpherePoint& x, const SpherePoint& y) = default;
};

}  // namespace stereo
