#pragma once

/**
 * The six circle/sphere geometries: ambient data (S, n, P), the exact
 * constants R, D, C, and the boundary field attached to each case.
 */

#include "stereo/kelement.hpp"
#include "stereo/quadreal.hpp"
#include "stereo/rational.hpp"

#include <string>
#include <vector>

namespace stereo {

enum class SpaceCase { S1_I, S1_II, S1_III, S2_I, S2_II, S2_III };

inline constexpr SpaceCase kAllCases[] = {SpaceCase::S1_I,  SpaceCase::S1_II,
                                          SpaceCase::S1_III, SpaceCase::S2_I,
                                          SpaceCase::S2_II,  SpaceCase::S2_III};

std::string to_string(SpaceCase c);
SpaceCase parse_space_case(const std::string& s);   // accepts "s1-i", "S1_I", ...
bool is_circle_case(SpaceCase c);                   // the three 1-sphere cases

using RatVec = std::vector<Rational>;
using RealVec = std::vector<QuadReal>;

struct SpaceSpec {
    SpaceCase tag;
    int l;                  // ambient dimension (2, 3 or 4)
    bool plane_W;           // true when W is the hyperplane sum(x) = 1
    RatVec center;          // c
    QuadReal R;
    RatVec base_point;      // n, a rational point of S
    RatVec plane_origin;    // a point of P (phi(0))
    RatVec plane_normal;    // n - c, normal to P
    QuadReal D;             // distance from n to P
    Rational RD;            // the product R*D, rational by construction
    QuadReal C;             // dilation factor of phi
    int k;                  // sphere equation p.p = k q^2 (1 or 2)
    KCase boundary_field;
};

/// The exact constants of one of the six cases; validates its own
/// invariants (n on S, RD rational, R and C as tabulated) on first use.
const SpaceSpec& space_spec(SpaceCase c);

// Small exact vector helpers shared by the geometry and horoball code.
Rational dot(const RatVec& x, const RatVec& y);
RatVec sub(const RatVec& x, const RatVec& y);
QuadReal dot(const RealVec& x, const RealVec& y);
RealVec sub(const RealVec& x, const RealVec& y);
RealVec to_real(const RatVec& x);

}  // namespace stereo
