#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stereo/spectrum.hpp"

#include <algorithm>

using namespace stereo;

TEST_CASE("square parts fold into the rational part") {
    SpectrumValue v = SpectrumValue::make(1, 2, 9, "t");  // 1 + 2*sqrt(9) = 7
    CHECK(v.sq_r == 7);
    CHECK(v.sq_s == 0);
    CHECK(v.m == 1);
    CHECK_THROWS(SpectrumValue::make(0, 1, -3, "t"));
    CHECK_THROWS(SpectrumValue::make(-5, 0, 1, "t"));
}

TEST_CASE("value ordering separates close squares") {
    SpectrumValue a = SpectrumValue::make(2, 0, 1, "a");           // sqrt 2
    SpectrumValue b = SpectrumValue::make(3, 0, 1, "b");           // sqrt 3
    SpectrumValue c = SpectrumValue::make(0, Rational(1, 2), 13, "c");  // 13^(1/4)/sqrt2
    CHECK(spectrum_less(a, b));
    CHECK_FALSE(spectrum_less(b, a));
    CHECK_FALSE(spectrum_less(a, a));
    CHECK(spectrum_less(c, a));  // squares: sqrt(13)/2 = 1.8027... < 2
    CHECK_FALSE(spectrum_less(a, c));
}

TEST_CASE("first circle spectrum starts sqrt2, sqrt3, sqrt(34)/3") {
    auto values = generated_spectrum(SpaceCase::S1_I, 30);
    REQUIRE(values.size() >= 3);
    CHECK(values[0].sq_r == 2);
    CHECK(values[1].sq_r == 3);
    CHECK(values[2].sq_r == Rational(34, 9));
    for (const auto& v : values) {
        CHECK(v.sq_s == 0);       // all squares rational
        CHECK(v.sq_r < 4);        // below the accumulation point
    }
    CHECK(std::is_sorted(values.begin(), values.end(),
                         [](const auto& a, const auto& b) { return spectrum_less(a, b); }));
}

TEST_CASE("largest generated square increases toward 4 with the bound") {
    Rational last(0);
    for (long bound : {30L, 100L, 1000L, 10000L}) {
        auto values = generated_spectrum(SpaceCase::S1_I, bound);
        Rational largest = values.back().sq_r;
        CHECK(largest > last);
        CHECK(largest < 4);
        last = largest;
    }
    CHECK(Rational(4) - last < Rational(1, 10000000));  // largest x is 5741
}

TEST_CASE("first 2-sphere family accumulates at sqrt 2") {
    auto values = generated_spectrum(SpaceCase::S2_I, 1000);
    for (const auto& v : values)
        if (v.sq_s == 0) CHECK(v.sq_r < 2);
    // the sporadic value sqrt((3/10) sqrt 41) sits in the list
    bool sporadic = false;
    for (const auto& v : values)
        if (v.generator == "sporadic") {
            sporadic = true;
            CHECK(v.sq_r == 0);
            CHECK(v.sq_s == Rational(3, 10));
            CHECK(v.m == 41);
        }
    CHECK(sporadic);
}

TEST_CASE("cases without a generated family only cite constants") {
    CHECK_THROWS_WITH(generated_spectrum(SpaceCase::S1_II, 10),
                      "only cited constants available");
    CHECK_THROWS(generated_spectrum(SpaceCase::S2_III, 10));
}

TEST_CASE("cited constants store exact squares") {
    auto s2_iii = cited_constants(SpaceCase::S2_III);
    REQUIRE(s2_iii.size() == 2);
    // minimum (13/4)^(1/4): square is sqrt(13)/2
    CHECK(s2_iii[0].sq_r == 0);
    CHECK(s2_iii[0].sq_s == Rational(1, 2));
    CHECK(s2_iii[0].m == 13);
    // smallest limit point ((14 + 8 sqrt3)/13)^(1/2)
    CHECK(s2_iii[1].sq_r == Rational(14, 13));
    CHECK(s2_iii[1].sq_s == Rational(8, 13));
    CHECK(s2_iii[1].m == 3);

    auto s2_ii = cited_constants(SpaceCase::S2_II);
    REQUIRE(s2_ii.size() == 2);
    CHECK(s2_ii[0].sq_r == 1);       // minimum 1
    CHECK(s2_ii[1].sq_r == Rational(Int(4) * 82662667, Int(405186721)));
    CHECK(s2_ii[1].sq_s == Rational(Int(4) * 11577720, Int(405186721)));
    CHECK(s2_ii[1].m == 47);
    CHECK(!s2_ii[1].verbatim.empty());  // ambiguous digit grouping kept verbatim
}

TEST_CASE("30-digit decimals are stable") {
    CHECK(SpectrumValue::make(2, 0, 1, "t").decimal(30) ==
          "1.41421356237309504880168872421");
    CHECK(SpectrumValue::make(0, Rational(1, 2), 13, "t").decimal(30) ==
          "1.34267480714132513530494723875");
    CHECK(SpectrumValue::make(Rational(14, 13), Rational(8, 13), 3, "t").decimal(30) ==
          "1.46383076103949357806311468808");
}

TEST_CASE("exact display forms") {
    CHECK(SpectrumValue::make(2, 0, 1, "t").exact_str() == "sqrt(2)");
    CHECK(SpectrumValue::make(Rational(14, 13), Rational(8, 13), 3, "t").exact_str() ==
          "sqrt(14/13 + (8/13)*sqrt(3))");
    CHECK(SpectrumValue::make(0, Rational(1, 2), 13, "t").square_str() == "(1/2)*sqrt(13)");
}

TEST_CASE("csv table carries the documented columns") {
    auto values = discrete_spectrum(SpaceCase::S1_I, 30);
    std::string csv = spectrum_csv(SpaceCase::S1_I, values);
    CHECK(csv.rfind("value_sq,value,generator,case\n", 0) == 0);
    CHECK(csv.find("2,1.41421356237309504880168872421,y=1,S1_I") != std::string::npos);
}
