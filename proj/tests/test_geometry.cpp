#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stereo/figures.hpp"
#include "stereo/geometry.hpp"

#include <random>

using namespace stereo;

namespace {

KElement sample(std::mt19937_64& rng, KCase field, long bound) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    Rational u(num(rng), den(rng));
    switch (field) {
        case KCase::Q: return KElement::from_rational(u);
        case KCase::Sqrt2Q: return KElement::from_sqrt2_multiple(u);
        default: return KElement::from_omega_coords(field, u, Rational(num(rng), den(rng)));
    }
}

}  // namespace

TEST_CASE("space constants satisfy their defining relations") {
    for (SpaceCase c : kAllCases) {
        const SpaceSpec& s = space_spec(c);
        // n lies on the sphere: |n - center|^2 = R^2
        RealVec n = to_real(s.base_point), ctr = to_real(s.center);
        CHECK(dot(sub(n, ctr), sub(n, ctr)) == s.R * s.R);
        // R*D is rational and equals the stored product
        CHECK(QuadReal(s.RD) == s.R * s.D);
        // the plane origin phi(0) is at distance D from n along the normal
        RealVec po = to_real(s.plane_origin);
        CHECK(dot(sub(n, po), to_real(s.plane_normal)) == s.D * s.R);
    }
}

TEST_CASE("the drawn correspondences reproduce bit-exactly and invert") {
    size_t total = 0;
    for (SpaceCase c : kAllCases) {
        for (const FigureEntry& e : figure_entries(c)) {
            CHECK(map_to_sphere(e.boundary, c, true) == e.sphere);
            CHECK(unmap(e.sphere, true) == e.boundary);
            ++total;
        }
    }
    CHECK(total == 12 + 12 + 10 + 6 + 12 + 8);
}

TEST_CASE("worked example: Phi(3/sqrt2) = (4,3)/5") {
    KElement z = KElement::parse(KCase::Sqrt2Q, "3/(sqrt2*1)");
    SpherePoint P = map_to_sphere(z, SpaceCase::S1_I);
    CHECK(P.str() == "(4,3)/5");
    CHECK(P.height() == 5);
    CHECK(unmap(P) == z);
}

TEST_CASE("worked example: Phi(1/2) = (2,2,-1)/3") {
    SpherePoint P = map_to_sphere(KElement::from_rational(Rational(1, 2)), SpaceCase::S1_III);
    CHECK(P.str() == "(2,2,-1)/3");
    CHECK(P.height() == 3);
}

TEST_CASE("Phi and unmap are mutually inverse on random elements") {
    std::mt19937_64 rng(11);
    for (SpaceCase c : kAllCases) {
        KCase field = space_spec(c).boundary_field;
        for (int i = 0; i < 200; ++i) {
            KElement z = sample(rng, field, 40);
            SpherePoint P = map_to_sphere(z, c);
            CHECK(unmap(P) == z);
            CHECK(P.height() == closed_form_height(z, c));
        }
        // the base point round trips through infinity
        SpherePoint n = map_to_sphere(KElement::infinity(field), c, true);
        CHECK(n.coords() == space_spec(c).base_point);
        CHECK(unmap(n, true).is_infinity());
        CHECK_THROWS(unmap(n));
    }
}

TEST_CASE("Phi is injective at small height") {
    std::mt19937_64 rng(5);
    for (SpaceCase c : kAllCases) {
        KCase field = space_spec(c).boundary_field;
        for (int i = 0; i < 100; ++i) {
            KElement z1 = sample(rng, field, 12), z2 = sample(rng, field, 12);
            if (z1 == z2) continue;
            CHECK(map_to_sphere(z1, c) != map_to_sphere(z2, c));
        }
    }
}

TEST_CASE("caption heights agree with the closed forms") {
    std::mt19937_64 rng(17);
    for (SpaceCase c : kAllCases) {
        KCase field = space_spec(c).boundary_field;
        for (int i = 0; i < 200; ++i) {
            KElement z = sample(rng, field, 30);
            SpherePoint P = map_to_sphere(z, c);
            CHECK(caption_boundary_height(P) == z.height());
        }
    }
}

TEST_CASE("the reflection is an involution on the plane and the sphere") {
    std::mt19937_64 rng(23);
    for (SpaceCase c : kAllCases) {
        const SpaceSpec& spec = space_spec(c);
        KCase field = spec.boundary_field;
        for (int i = 0; i < 50; ++i) {
            KElement z = sample(rng, field, 15);
            RatVec x = phi_plane(z, c);
            CHECK(reflect_in_sphere(reflect_in_sphere(x, spec), spec) == x);
        }
    }
}

TEST_CASE("both dilation conditions hold with exact witnesses") {
    std::mt19937_64 rng(3);
    for (SpaceCase c : kAllCases) {
        KCase field = space_spec(c).boundary_field;
        for (int i = 0; i < 150; ++i) {
            KElement z1 = sample(rng, field, 25), z2 = sample(rng, field, 25);
            if (z1 == z2) continue;
            PhiConditionReport r = verify_phi_conditions(c, z1, z2);
            CHECK(r.phi_i_holds);
            CHECK(r.phi_ii_holds);
            CHECK(r.lhs_i == r.rhs_i);
            CHECK(r.lhs_ii_z1 == r.rhs_ii_z1);
        }
    }
}

TEST_CASE("chordal identity ties the reflection to boundary distances") {
    // |Psi(x) - Psi(y)|^2 computed directly equals the closed identity
    for (SpaceCase c : {SpaceCase::S1_III, SpaceCase::S2_I}) {
        const SpaceSpec& spec = space_spec(c);
        KCase field = spec.boundary_field;
        std::mt19937_64 rng(29);
        for (int i = 0; i < 50; ++i) {
            KElement z1 = sample(rng, field, 10), z2 = sample(rng, field, 10);
            if (z1 == z2) continue;
            RatVec x = phi_plane(z1, c), y = phi_plane(z2, c);
            RatVec px = reflect_in_sphere(x, spec), py = reflect_in_sphere(y, spec);
            CHECK(dot(sub(px, py), sub(px, py)) == chordal_distance_sq(x, y, spec));
        }
    }
}

TEST_CASE("sphere points validate their invariants") {
    CHECK_THROWS(SpherePoint::parse(SpaceCase::S1_I, "(1,1)/1"));    // not on the circle
    CHECK_THROWS(SpherePoint::parse(SpaceCase::S1_III, "(2,2,2)/3"));  // off the plane W
    SpherePoint P = SpherePoint::parse(SpaceCase::S1_I, "(4,3)/5");
    CHECK(P.coords() == RatVec{Rational(4, 5), Rational(3, 5)});
    CHECK(SpherePoint::from_coords(SpaceCase::S1_I, P.coords()) == P);
}
