#pragma once

/**
 * The worked boundary/sphere correspondences drawn in the six tangency
 * figures (12 + 12 + 10 + 6 + 12 + 8 points), as exact data.
 */

#include "stereo/geometry.hpp"

#include <string>
#include <vector>

namespace stereo {

struct FigureEntry {
    std::string label;       // the boundary value as drawn, e.g. "1/(1-w)"
    KElement boundary;
    SpherePoint sphere;
};

/// The listed correspondences of the case, in drawing order.  Every entry
/// satisfies sphere == Phi(boundary); the accessor validates this once.
const std::vector<FigureEntry>& figure_entries(SpaceCase space);

/// Plain-text table of one case: "<label>\t<element>\t<point>" lines.
std::string figure_table(SpaceCase space);

/// JSON array [{label, boundary, point, q}] for one case.
std::string figure_json(SpaceCase space);

}  // namespace stereo
