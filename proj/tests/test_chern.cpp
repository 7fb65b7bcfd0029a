#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pellwall/chern.hpp"
#include "pellwall/walls.hpp"

using namespace pellwall;

TEST_CASE("discriminant") {
    CHECK(discriminant(ideal_point_class(2)) == Rational(8));  // 4d, the minimum positive value
    CHECK(discriminant(ChernVector(8, -4, Rational(1), 2)) == Rational(0));
    CHECK(discriminant(ChernVector(0, 0, Rational(1), 2)) == Rational(0));
    // quadratic in the class: Delta(k v) = k^2 Delta(v)
    ChernVector v(6, -2, Rational(5, 2), 3);
    for (long k = -3; k <= 3; ++k) {
        ChernVector kv(k * v.v0, k * v.v1, Rational(k) * v.v2, 3);
        CHECK(discriminant(kv) == Rational(k) * Rational(k) * discriminant(v));
    }
}

TEST_CASE("ideal point class") {
    CHECK(ideal_point_class(2) == ChernVector(4, 0, Rational(-1), 2));
    CHECK(ideal_point_class(1) == ChernVector(2, 0, Rational(-1), 1));
    CHECK(ideal_point_class(7) == ChernVector(14, 0, Rational(-1), 7));
    CHECK(ideal_point_class(7).satisfies_divisibility());
}

TEST_CASE("slope") {
    CHECK(slope(ChernVector(8, -4, Rational(1), 2)) == SlopeValue::finite(Rational(-1, 2)));
    CHECK(slope(ideal_point_class(2)) == SlopeValue::finite(Rational(0)));
    CHECK(slope(ChernVector(0, 4, Rational(-2), 2)).is_infinite());
    CHECK_THROWS_AS(slope(ChernVector(0, 4, Rational(-2), 2)).value(), std::domain_error);
}

TEST_CASE("chi twist") {
    ChernVector ipc = ideal_point_class(2);
    CHECK(chi_twist(ipc, Rational(1)) == Rational(1));    // 2*1 - 1
    CHECK(chi_twist(ipc, Rational(0)) == Rational(-1));   // chi = v2
    CHECK(chi_twist(ChernVector(8, -4, Rational(1), 2), Rational(1, 2)) == Rational(0));
    // chi of the ideal point class is d x^2 - 1 identically: coefficients
    // (v0/2, v1, v2) must equal (d, 0, -1), and sampling agrees
    for (long d : {1L, 2L, 5L, 12L}) {
        ChernVector v = ideal_point_class(d);
        CHECK(Rational(v.v0, 2) == Rational(Integer(d)));
        CHECK(v.v1 == 0);
        CHECK(v.v2 == Rational(-1));
        for (long i = -4; i <= 4; ++i) {
            Rational x(i, 3);
            CHECK(chi_twist(v, x) == Rational(Integer(d)) * x * x - Rational(1));
        }
    }
}

TEST_CASE("tilt slope") {
    ChernVector ipc = ideal_point_class(2);
    ChernVector sub(8, -4, Rational(1), 2);
    // both classes have vanishing slope on the d = 2 wall point
    CHECK(tilt_nu(ipc, Rational(-3, 4), Rational(1, 16)) == TiltSlope::finite(Rational(0)));
    CHECK(tilt_nu(sub, Rational(-3, 4), Rational(1, 16)) == TiltSlope::finite(Rational(0)));
    // beta at the slope of a discriminant-zero class: 0/0
    CHECK(tilt_nu(sub, Rational(-1, 2), Rational(0)).kind == TiltKind::degenerate);
    CHECK_THROWS_AS(tilt_nu(ipc, Rational(0), Rational(-1)), std::invalid_argument);
}

TEST_CASE("tilt slope limits at the class slope") {
    // v0 != 0, beta = slope(v): infinite when Delta != 0, degenerate when
    // Delta = 0 (both parts of the quotient vanish).
    ChernVector nonzero_delta(4, -2, Rational(3), 2);
    REQUIRE(discriminant(nonzero_delta) != Rational(0));
    Rational beta = slope(nonzero_delta).value();
    CHECK(tilt_nu(nonzero_delta, beta, Rational(0)).kind == TiltKind::infinite);

    ChernVector zero_delta(8, -4, Rational(1), 2);
    REQUIRE(discriminant(zero_delta) == Rational(0));
    CHECK(tilt_nu(zero_delta, slope(zero_delta).value(), Rational(0)).kind ==
          TiltKind::degenerate);
}

TEST_CASE("divisibility of wall-class discriminants") {
    for (long d : {2L, 3L, 5L, 7L, 10L}) {
        for (const auto& [sol, wall] : enumerate_walls(d, 3)) {
            DestabilizingPair pair = pell_to_pair(d, sol);
            for (const ChernVector* v : {&pair.sub, &pair.quot}) {
                CHECK(v->satisfies_divisibility());
                Rational delta = discriminant(*v);
                CHECK(delta.is_integer());
                CHECK(delta.num() % (4 * Integer(d)) == 0);
            }
        }
    }
}

TEST_CASE("chern vector context checks") {
    CHECK_THROWS_AS(ideal_point_class(2) + ideal_point_class(3), std::invalid_argument);
    CHECK_THROWS_AS(ChernVector(1, 0, Rational(0), 0), std::invalid_argument);
}
