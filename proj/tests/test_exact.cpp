#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stereo/interval.hpp"
#include "stereo/quadext.hpp"
#include "stereo/quadreal.hpp"
#include "stereo/rational.hpp"

using namespace stereo;

TEST_CASE("parse_rational round trips and rejects garbage") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK(parse_rational("6/-8") == Rational(-3, 4));
    CHECK(parse_rational("12") == Rational(12));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
}

TEST_CASE("decimal_string prints certified significant digits") {
    CHECK(decimal_string(Rational(1, 2), 5) == "5e-1");
    CHECK(decimal_string(Rational(-1, 3), 5) == "-3.3333e-1");
    CHECK(decimal_string(Rational(3), 4) == "3");
    // 30 digits of 1/7, repeat 142857
    CHECK(decimal_string(Rational(1, 7), 30) == "1.42857142857142857142857142857e-1");
    CHECK(decimal_string(Rational(99, 70), 10) == "1.414285714");
}

TEST_CASE("integer square roots") {
    CHECK(isqrt(Int(0)) == 0);
    CHECK(isqrt(Int(15)) == 3);
    CHECK(isqrt(Int(16)) == 4);
    Int big = Int("123456789123456789");
    CHECK(isqrt(big * big) == big);
    CHECK(isqrt(big * big + 1) == big);
    Int root;
    CHECK(perfect_square(Int(49), &root));
    CHECK(root == 7);
    CHECK_FALSE(perfect_square(Int(48), &root));
}

TEST_CASE("sqrt_interval encloses with requested width") {
    for (int n : {2, 3, 5, 41, 47}) {
        RatInterval v = sqrt_interval(Rational(n), 128);
        CHECK(v.lo * v.lo <= Rational(n));
        CHECK(v.hi * v.hi >= Rational(n));
        CHECK(v.width() <= Rational(Int(1), Int(1) << 120));
    }
    CHECK(sqrt_interval(Rational(0), 32).lo == 0);
    CHECK_THROWS_AS(sqrt_interval(Rational(-1), 32), std::domain_error);
}

TEST_CASE("interval arithmetic is exactly contained") {
    RatInterval a(Rational(1, 3), Rational(1, 2));
    RatInterval b(Rational(-2), Rational(3));
    RatInterval p = a * b;
    CHECK(p.lo == Rational(-1));
    CHECK(p.hi == Rational(3, 2));
    CHECK_THROWS_AS(b.inv(), std::domain_error);
    RatInterval q = a.inv();
    CHECK(q.lo == 2);
    CHECK(q.hi == 3);
}

TEST_CASE("QuadExt arithmetic and norms") {
    QuadExt x(-1, Rational(1), Rational(2));   // 1 + 2i
    QuadExt y(-1, Rational(2), Rational(1));   // 2 + i
    QuadExt q = x / y;
    CHECK(q == QuadExt(-1, Rational(4, 5), Rational(3, 5)));
    CHECK(x.norm() == Rational(5));
    CHECK((x * x.conj()).a() == Rational(5));
    QuadExt r(2, Rational(0), Rational(5, 6));  // (5/6) sqrt2
    CHECK(r.norm() == Rational(-25, 18));
    CHECK_THROWS_AS(x + r, std::invalid_argument);
}

TEST_CASE("QuadReal is a field with exact signs") {
    QuadReal s2 = QuadReal::sqrt2(), s3 = QuadReal::sqrt3(), s6 = QuadReal::sqrt6();
    CHECK(s2 * s3 == s6);
    CHECK(s2 * s2 == QuadReal(Rational(2)));
    CHECK((s2 + s3) * (s3 - s2) == QuadReal(Rational(1)));

    QuadReal x(Rational(1, 2), Rational(-3), Rational(2, 7), Rational(5));
    QuadReal inv = QuadReal(Rational(1)) / x;
    CHECK(x * inv == QuadReal(Rational(1)));

    // sqrt6 - sqrt2*sqrt3 = 0 exactly; sign must not loop forever.
    CHECK((s6 - s2 * s3).sign() == 0);
    CHECK((s2 + s3 - s6).sign() > 0);
}

TEST_CASE("QuadReal ordering matches the real embedding") {
    QuadReal s2 = QuadReal::sqrt2(), s3 = QuadReal::sqrt3(), s6 = QuadReal::sqrt6();
    CHECK(s2 < s3);
    CHECK(s6 > s3);
    CHECK((s2 + s3) > s6);  // 3.146... vs 2.449...
    RatInterval e = (s2 + s3).enclosure(100);
    CHECK(RatInterval(parse_rational("314626436994/100000000000"),
                      parse_rational("314626436995/100000000000"))
              .contains(e));
}

TEST_CASE("QuadReal str forms") {
    CHECK(QuadReal(Rational(0)).str() == "0");
    CHECK(QuadReal::sqrt2().str() == "sqrt2");
    CHECK(QuadReal(Rational(1, 2), Rational(3), Rational(0), Rational(0)).str() ==
          "1/2 + 3*sqrt2");
    CHECK(QuadReal(Rational(0), Rational(0), Rational(-1), Rational(0)).str() == "-sqrt3");
}
