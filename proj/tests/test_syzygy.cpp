#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pellwall/syzygy.hpp"

using namespace pellwall;

TEST_CASE("status at distinguished twists") {
    CHECK(status_at(h0_square_shape(4), Rational(1, 2)) == RegularityStatus::gv_not_mregular);
    CHECK(status_at(h0_pell_shape(2, PellSolution(3, 1, 2)), Rational(1)) ==
          RegularityStatus::mregular_not_it0);
    CHECK(status_at(h0_pell_shape(7, PellSolution(127, 24, 7)), Rational(1, 2)) ==
          RegularityStatus::it0);
    CHECK(status_at(h0_square_shape(4), Rational(1, 4)) == RegularityStatus::not_gv);
    CHECK_THROWS_AS(status_at(h0_square_shape(4), Rational(0)), std::invalid_argument);
}

TEST_CASE("status ordering is monotone in x") {
    for (long d : {2L, 4L, 7L}) {
        for (const auto& c : candidates(d, 2, false)) {
            RegularityStatus prev = RegularityStatus::not_gv;
            bool reached_it0 = false;
            for (int i = 1; i <= 60; ++i) {
                Rational x(i, 24);
                RegularityStatus s = status_at(c, x);
                if (reached_it0) CHECK(s == RegularityStatus::it0);
                reached_it0 = reached_it0 || s == RegularityStatus::it0;
                // statuses never drop back below GV after the threshold
                if (prev >= RegularityStatus::mregular_not_it0 && x > Rational(1, 24))
                    CHECK(s >= RegularityStatus::mregular_not_it0);
                prev = s;
            }
            CHECK(reached_it0);
        }
    }
}

TEST_CASE("M-regular fraction test") {
    CHECK(mregular_fraction_test(10, 3));
    CHECK_FALSE(mregular_fraction_test(9, 3));
    CHECK(mregular_fraction_test(50, 7));
    CHECK_THROWS_AS(mregular_fraction_test(10, 0), std::invalid_argument);

    // matches the status computation for square d
    long d = 9;
    CrfCandidate c = h0_square_shape(d);
    for (long m = 1; m <= 6; ++m) {
        bool at_least_mregular =
            status_at(c, Rational(1, m)) >= RegularityStatus::mregular_not_it0;
        CHECK(at_least_mregular == mregular_fraction_test(d, m));
    }
}

TEST_CASE("verdicts") {
    SyzygyVerdict v7 = verdict(7);
    CHECK(v7.projectively_normal == TriState::yes);
    CHECK_FALSE(v7.np_guaranteed.has_value());
    CHECK(v7.basepoint_free == TriState::yes);

    CHECK(verdict(10).np_guaranteed == 1);
    CHECK(verdict(17).np_guaranteed == 2);
    CHECK(verdict(26).np_guaranteed == 3);

    SyzygyVerdict v2 = verdict(2);
    CHECK(v2.basepoint_free == TriState::candidate_dependent);
    CHECK(v2.projectively_normal == TriState::no);

    CHECK(verdict(1).basepoint_free == TriState::no);  // epsilon1 = 1: base points
    CHECK(verdict(4).basepoint_free == TriState::yes);
    CHECK(verdict(6).projectively_normal == TriState::no);

    // caveats always carry the lattice hypothesis
    for (long d : {1L, 2L, 7L})
        CHECK(verdict(d).caveats.front().find("divisor class") != std::string::npos);
}

TEST_CASE("projective normality implies IT0 at one half") {
    for (long d = 7; d <= 40; ++d) {
        CAPTURE(d);
        if (verdict(d).projectively_normal != TriState::yes) continue;
        for (const auto& c : candidates(d, 2, true))
            CHECK(status_at(c, Rational(1, 2)) == RegularityStatus::it0);
    }
}

TEST_CASE("floor-sqrt inequality records") {
    FloorSqrtRecord r7 = verify_floor_sqrt_inequality(7);
    CHECK(r7.m == 2);
    CHECK(r7.k == 3);
    CHECK(r7.y0 == 24);
    CHECK(r7.ky0_ge_m);
    CHECK(r7.threshold_le_inv_m);

    FloorSqrtRecord r2 = verify_floor_sqrt_inequality(2);
    CHECK(r2.m == 1);
    CHECK(r2.k == 1);
    CHECK(r2.y0 == 1);
    CHECK(r2.ky0_ge_m);           // equality case: 1 >= 1
    CHECK(r2.threshold_le_inv_m);  // 1 <= 1

    FloorSqrtRecord r5 = verify_floor_sqrt_inequality(5);
    CHECK(r5.m == 2);
    CHECK(r5.k == 1);
    CHECK(r5.y0 == 2);
    CHECK(r5.x0 == 9);
    CHECK(r5.ky0_ge_m);
    CHECK(r5.threshold_le_inv_m);

    CHECK_THROWS_AS(verify_floor_sqrt_inequality(16), std::invalid_argument);

    for (long d = 2; d <= 300; ++d) {
        if (is_perfect_square(Integer(d))) continue;
        CAPTURE(d);
        FloorSqrtRecord rec = verify_floor_sqrt_inequality(d);
        CHECK(rec.ky0_ge_m);
        CHECK(rec.threshold_le_inv_m);
    }
}
