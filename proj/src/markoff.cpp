#include "stereo/markoff.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace stereo {

namespace {

/// Left-hand side minus right-hand side of the defining equation with the
/// given slot replaced by t.  The flip below reads the quadratic's
/// coefficients off this polynomial instead of hard-coding them.
Int equation_residual(const MarkoffTriple& t, int slot, const Int& value) {
    Int x = slot == 0 ? value : t.x;
    Int y1 = slot == 1 ? value : t.y1;
    Int y2 = slot == 2 ? value : t.y2;
    return 2 * x * x + y1 * y1 + y2 * y2 - 4 * x * y1 * y2;
}

Int slot_value(const MarkoffTriple& t, int slot) {
    return slot == 0 ? t.x : slot == 1 ? t.y1 : t.y2;
}

}  // namespace

Int MarkoffTriple::max_component() const { return std::max(x, std::max(y1, y2)); }

MarkoffTriple vieta_flip(const MarkoffTriple& t, int slot) {
    if (slot < 0 || slot > 2) throw std::invalid_argument("vieta_flip: slot out of range");
    if (!t.satisfies_equation()) throw std::invalid_argument("vieta_flip: not a solution");
    // In each slot the equation is a quadratic a s^2 + b s + c = 0;
    // sample it at s = -1, 0, 1 to recover a and b, then replace the
    // current root by the conjugate (-b/a) - s.
    Int e0 = equation_residual(t, slot, 0);
    Int e1 = equation_residual(t, slot, 1);
    Int em = equation_residual(t, slot, -1);
    Int a = (e1 + em) / 2 - e0;
    Int b = (e1 - em) / 2;
    if (b % a != 0) throw std::logic_error("vieta_flip: conjugate root not integral");
    Int other = -b / a - slot_value(t, slot);
    MarkoffTriple out = t;
    (slot == 0 ? out.x : slot == 1 ? out.y1 : out.y2) = other;
    if (!out.satisfies_equation()) throw std::logic_error("vieta_flip: flip left the variety");
    return out;
}

std::vector<MarkoffTriple> markoff_tree(const Int& bound) {
    if (bound < 1) throw std::invalid_argument("markoff_tree: bound must be >= 1");
    std::set<MarkoffTriple> seen;
    std::deque<MarkoffTriple> queue;
    MarkoffTriple root{1, 1, 1};
    if (root.max_component() <= bound) queue.push_back(root);
    while (!queue.empty()) {
        MarkoffTriple t = queue.front();
        queue.pop_front();
        if (t.y1 > t.y2) std::swap(t.y1, t.y2);
        if (!seen.insert(t).second) continue;
        for (int slot = 0; slot < 3; ++slot) {
            MarkoffTriple next = vieta_flip(t, slot);
            if (next.x > 0 && next.y1 > 0 && next.y2 > 0 && next.max_component() <= bound)
                queue.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {

/// Distinct values of one slot among all solutions where that value is
/// <= bound.  The tree is expanded with the *other* components allowed to
/// grow past the bound far enough that no small slot value is missed: a
/// solution's slot values only increase along the tree away from its
/// record, so a generous companion bound is sufficient and is validated
/// by the brute-force oracle in the tests.
std::vector<Int> slot_values(const Int& bound, bool x_slot) {
    Int companion = bound * bound * 16 + 16;
    std::set<Int> values;
    for (const MarkoffTriple& t : markoff_tree(companion)) {
        if (x_slot) {
            if (t.x <= bound) values.insert(t.x);
        } else {
            if (t.y1 <= bound) values.insert(t.y1);
            if (t.y2 <= bound) values.insert(t.y2);
        }
    }
    return {values.begin(), values.end()};
}

}  // namespace

std::vector<Int> markoff_x_values(const Int& bound) { return slot_values(bound, true); }
std::vector<Int> markoff_y_values(const Int& bound) { return slot_values(bound, false); }

}  // namespace stereo
