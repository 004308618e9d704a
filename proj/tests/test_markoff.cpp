#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stereo/markoff.hpp"

#include <set>

using namespace stereo;

namespace {

/// Exhaustive search for solutions of 2x^2 + y1^2 + y2^2 = 4 x y1 y2 with
/// every component <= bound, canonicalized to y1 <= y2.  Small enough
/// bounds only; this is the independent oracle for the tree search.
std::set<MarkoffTriple> brute_force(long bound) {
    // For fixed (x, y1) the equation is a monic quadratic in y2:
    // y2 = 2 x y1 +- sqrt(4 x^2 y1^2 - 2 x^2 - y1^2); enumerate the pairs
    // and keep the integer roots.  Covers every solution because y2 ranges
    // over all of 1..bound as y1 does.
    std::set<MarkoffTriple> found;
    for (long x = 1; x <= bound; ++x)
        for (long y1 = 1; y1 <= bound; ++y1) {
            Int disc = Int(4) * x * x * y1 * y1 - Int(2) * x * x - Int(y1) * y1;
            if (disc < 0) continue;
            Int s;
            if (!perfect_square(disc, &s)) continue;
            for (Int y2 : {Int(2) * x * y1 - s, Int(2) * x * y1 + s}) {
                if (y2 < 1 || y2 > bound) continue;
                MarkoffTriple t{x, y1 <= y2 ? Int(y1) : y2, y1 <= y2 ? y2 : Int(y1)};
                if (t.satisfies_equation()) found.insert(t);
            }
        }
    return found;
}

}  // namespace

TEST_CASE("the root solves the equation and flips stay on the variety") {
    MarkoffTriple root{1, 1, 1};
    CHECK(root.satisfies_equation());
    for (int slot = 0; slot < 3; ++slot) {
        MarkoffTriple t = vieta_flip(root, slot);
        CHECK(t.satisfies_equation());
        CHECK(vieta_flip(t, slot) == root);  // flips are involutions
    }
    CHECK_THROWS(vieta_flip(root, 3));
    CHECK_THROWS(vieta_flip(MarkoffTriple{1, 1, 2}, 0));
}

TEST_CASE("tree search matches the exhaustive oracle up to 500") {
    auto tree = markoff_tree(500);
    auto oracle = brute_force(500);
    CHECK(std::set<MarkoffTriple>(tree.begin(), tree.end()) == oracle);
}

TEST_CASE("frozen solution list up to 500") {
    std::vector<MarkoffTriple> expected = {
        {1, 1, 1},   {1, 1, 3},    {1, 3, 11},  {1, 11, 41}, {1, 41, 153},
        {1, 153, 571}, {5, 1, 3},  {5, 1, 17},  {5, 3, 59},  {5, 17, 339},
        {29, 1, 17}, {29, 1, 99},  {65, 3, 11}, {169, 1, 99}, {349, 3, 59},
    };
    // drop entries whose largest component exceeds the bound
    std::vector<MarkoffTriple> kept;
    for (const auto& t : expected)
        if (t.max_component() <= 500) kept.push_back(t);
    auto tree = markoff_tree(500);
    CHECK(tree == kept);
}

TEST_CASE("x-values and y-values at the quoted bounds") {
    CHECK(markoff_x_values(30) == std::vector<Int>{1, 5, 29});
    CHECK(markoff_y_values(20) == std::vector<Int>{1, 3, 11, 17});
    CHECK(markoff_x_values(100) == std::vector<Int>{1, 5, 29, 65});
    CHECK(markoff_y_values(100) == std::vector<Int>{1, 3, 11, 17, 41, 59, 99});
}

TEST_CASE("11 solves the equation only in a y slot") {
    // (1, 3, 11) is a solution, so 11 is a y-value; no solution has x = 11
    CHECK(MarkoffTriple{1, 3, 11}.satisfies_equation());
    for (long y1 = 1; y1 <= 2000; ++y1)
        for (long y2 = y1; y2 <= 2000; ++y2)
            CHECK_FALSE(MarkoffTriple{11, y1, y2}.satisfies_equation());
}

TEST_CASE("slot value sets are consistent with the tree") {
    auto tree = markoff_tree(400);
    std::set<Int> xs, ys;
    for (const auto& t : tree) {
        xs.insert(t.x);
        ys.insert(t.y1);
        ys.insert(t.y2);
    }
    for (const Int& x : markoff_x_values(400)) CHECK(xs.count(x) == 1);
    for (const Int& y : markoff_y_values(400)) CHECK(ys.count(y) == 1);
}

TEST_CASE("tree output is canonical and deduplicated") {
    auto tree = markoff_tree(1000);
    std::set<MarkoffTriple> seen;
    for (const auto& t : tree) {
        CHECK(t.y1 <= t.y2);
        CHECK(t.satisfies_equation());
        CHECK(t.max_component() <= 1000);
        CHECK(seen.insert(t).second);
    }
}
