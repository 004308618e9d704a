#pragma once

/**
 * Tangency graphs of the horoball families: one node per rational point of
 * the sphere up to a height bound, one edge per exactly-tangent pair of
 * horoballs, decided by the integer bilinear forms.
 */

#include "stereo/horoball.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace stereo {

struct TangencyGraph {
    SpaceCase space = SpaceCase::S1_I;
    Int bound = 0;
    std::vector<SpherePoint> nodes;                   // sorted by (height, coords)
    std::vector<std::pair<size_t, size_t>> edges;     // i < j, lexicographically sorted
};

/// All rational points of the sphere with height <= bound, including the
/// base point n = Phi(infinity).  Enumerated through bounded K-height
/// sweeps of the boundary field, which the height correspondence makes
/// complete; sorted deterministically.
std::vector<SpherePoint> enumerate_sphere_points(SpaceCase space, const Int& bound);

/// The boundary elements (with infinity) whose images are the nodes above.
std::vector<KElement> enumerate_boundary_elements(SpaceCase space, const Int& sphere_height_bound);

TangencyGraph tangency_graph(SpaceCase space, const Int& height_bound, unsigned threads = 1);

enum class GraphFormat { Dot, Json, SvgCircles };
GraphFormat parse_graph_format(const std::string& name);

/// Serialize; svg-circles is only defined for the 1-sphere cases.
std::string export_graph(const TangencyGraph& g, GraphFormat format);

/// Inverse of the json serialization (validates every node).
TangencyGraph graph_from_json(const std::string& text);

}  // namespace stereo
