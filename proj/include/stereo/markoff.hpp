#pragma once

/**
 * The Markoff-type Diophantine equation 2x^2 + y1^2 + y2^2 = 4 x y1 y2
 * and its solution tree: every positive solution is reachable from the
 * root (1, 1, 1) by Vieta flips, one per coordinate slot.
 */

#include "stereo/rational.hpp"

#include <compare>
#include <vector>

namespace stereo {

struct MarkoffTriple {
    Int x, y1, y2;

    bool satisfies_equation() const {
        return 2 * x * x + y1 * y1 + y2 * y2 == 4 * x * y1 * y2;
    }
    Int max_component() const;

    friend bool operator==(const MarkoffTriple& a, const MarkoffTriple& b) = default;
    friend std::strong_ordering operator<=>(const MarkoffTriple& a, const MarkoffTriple& b) = default;
};

/// Vieta flip of slot (0 = x, 1 = y1, 2 = y2): the other root of the
/// equation viewed as a quadratic in that slot.  The flip is computed from
/// the quadratic's coefficients, extracted by evaluating the equation.
MarkoffTriple vieta_flip(const MarkoffTriple& t, int slot);

/// All solutions with max component <= bound, canonical (y1 <= y2),
/// deduplicated and sorted.  Tree search from the root.
std::vector<MarkoffTriple> markoff_tree(const Int& bound);

/// Sorted distinct x-values (resp. y-values) among solutions whose
/// relevant component is <= bound.
std::vector<Int> markoff_x_values(const Int& bound);
std::vector<Int> markoff_y_values(const Int& bound);

}  // namespace stereo
