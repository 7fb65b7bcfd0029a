#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pellwall/crf.hpp"

using namespace pellwall;

namespace {
QuadraticNumber qn(const Rational& r, long d) { return QuadraticNumber::from_rational(r, d); }
}  // namespace

TEST_CASE("square shape") {
    CrfCandidate c4 = h0_square_shape(4);
    CHECK(c4.shape == ShapeKind::perfect_square);
    REQUIRE(c4.h0.breakpoints().size() == 1);
    CHECK(c4.h0.breakpoints()[0] == qn(Rational(1, 2), 4));
    CHECK(c4.h0.pieces()[0].is_zero());
    CHECK(c4.h0.pieces()[1] == QuadraticPolynomial{Rational(4), Rational(0), Rational(-1)});

    CrfCandidate c1 = h0_square_shape(1);
    CHECK(epsilon1_of(c1) == qn(Rational(1), 1));
    CHECK(c1.h0.eval(Rational(2)) == Rational(3));  // x^2 - 1

    CrfCandidate c2 = h0_square_shape(2);
    CHECK(c2.shape == ShapeKind::trivial);
    CHECK_FALSE(epsilon1_of(c2).is_rational());
    CHECK(epsilon1_of(c2) == QuadraticNumber::sqrt_multiple(Rational(1, 2), 2));
}

TEST_CASE("pell shape middle pieces") {
    CrfCandidate c = h0_pell_shape(2, PellSolution(3, 1, 2));
    CHECK(c.h0.pieces()[1] == QuadraticPolynomial{Rational(4), Rational(-4), Rational(1)});
    CHECK(c.h0.breakpoints()[0] == qn(Rational(1, 2), 2));
    CHECK(c.h0.breakpoints()[1] == qn(Rational(1), 2));

    CrfCandidate c3 = h0_pell_shape(3, PellSolution(7, 2, 3));
    CHECK(c3.h0.pieces()[1] == QuadraticPolynomial{Rational(12), Rational(-12), Rational(3)});
    CHECK(c3.h0.breakpoints()[0] == qn(Rational(1, 2), 3));
    CHECK(c3.h0.breakpoints()[1] == qn(Rational(2, 3), 3));

    CrfCandidate c17 = h0_pell_shape(2, PellSolution(17, 6, 2));
    CHECK(c17.h0.pieces()[1] == QuadraticPolynomial{Rational(18), Rational(-24), Rational(8)});
    CHECK(c17.h0.breakpoints()[0] == qn(Rational(2, 3), 2));
    CHECK(c17.h0.breakpoints()[1] == qn(Rational(3, 4), 2));
}

TEST_CASE("h1 pieces") {
    CrfCandidate c = h0_pell_shape(2, PellSolution(3, 1, 2));
    PiecewisePolynomial h1 = h1_of(c);
    CHECK(h1.pieces()[0] == QuadraticPolynomial{Rational(-2), Rational(0), Rational(1)});
    CHECK(h1.pieces()[1] == QuadraticPolynomial{Rational(2), Rational(-4), Rational(2)});
    CHECK(h1.pieces()[2].is_zero());

    CrfCandidate c4 = h0_square_shape(4);
    PiecewisePolynomial h14 = h1_of(c4);
    CHECK(h14.pieces()[0] == QuadraticPolynomial{Rational(-4), Rational(0), Rational(1)});
    CHECK(h14.pieces()[1].is_zero());

    for (const auto& cand : {c, c4, h0_square_shape(7)})
        CHECK(h1_of(cand).eval(Rational(0)) == Rational(1));
}

TEST_CASE("epsilon1 values") {
    CHECK(epsilon1_of(h0_square_shape(4)) == qn(Rational(1, 2), 4));
    CHECK(epsilon1_of(h0_pell_shape(7, PellSolution(127, 24, 7))) == qn(Rational(8, 21), 7));
    CHECK(epsilon1_of(h0_pell_shape(2, PellSolution(3, 1, 2))) == qn(Rational(1), 2));
}

TEST_CASE("C1 classification at breakpoints") {
    CrfCandidate pell = h0_pell_shape(2, PellSolution(3, 1, 2));
    CHECK(pell.h0.is_c1_at(qn(Rational(1), 2)));
    CHECK(pell.h0.is_c1_at(qn(Rational(1, 2), 2)));

    CrfCandidate square = h0_square_shape(4);
    CHECK_FALSE(square.h0.is_c1_at(qn(Rational(1, 2), 4)));
    CHECK_THROWS_AS(square.h0.is_c1_at(qn(Rational(1, 3), 4)), std::invalid_argument);

    // trivial shape: kink at the irrational breakpoint
    CrfCandidate trivial = h0_square_shape(2);
    CHECK_FALSE(trivial.h0.is_c1_at(epsilon1_of(trivial)));
}

TEST_CASE("piecewise construction rejects bad data") {
    std::vector<QuadraticNumber> bps{qn(Rational(1), 2)};
    // discontinuous at the breakpoint
    CHECK_THROWS_AS(
        PiecewisePolynomial(bps, {QuadraticPolynomial::zero(),
                                  QuadraticPolynomial{Rational(0), Rational(0), Rational(1)}}),
        std::invalid_argument);
    // wrong piece count
    CHECK_THROWS_AS(PiecewisePolynomial(bps, {QuadraticPolynomial::zero()}),
                    std::invalid_argument);
    // breakpoints out of order
    std::vector<QuadraticNumber> bad{qn(Rational(2), 2), qn(Rational(1), 2)};
    CHECK_THROWS_AS(PiecewisePolynomial(bad, {QuadraticPolynomial::zero(),
                                              QuadraticPolynomial::zero(),
                                              QuadraticPolynomial::zero()}),
                    std::invalid_argument);
}

TEST_CASE("half-open piece ownership") {
    CrfCandidate c = h0_pell_shape(2, PellSolution(3, 1, 2));
    CHECK(c.h0.piece_index(Rational(0)) == 0);
    CHECK(c.h0.piece_index(Rational(1, 2)) == 1);  // breakpoint belongs to the right
    CHECK(c.h0.piece_index(Rational(3, 4)) == 1);
    CHECK(c.h0.piece_index(Rational(1)) == 2);
    CHECK(c.h0.piece_index(Rational(5)) == 2);
    CHECK_THROWS_AS(c.h0.eval(Rational(-1)), std::domain_error);
    CHECK(c.h0.eval(Rational(3, 4)) == Rational(1, 4));  // (2x-1)^2 at 3/4
}

TEST_CASE("candidate lists") {
    // a perfect square admits only the kinked shape, whatever the flags
    for (bool narrowing : {false, true}) {
        auto square = candidates(4, 5, narrowing);
        REQUIRE(square.size() == 1);
        CHECK(square[0].shape == ShapeKind::perfect_square);
    }

    auto narrowed = candidates(2, 5, true);
    REQUIRE(narrowed.size() == 2);
    CHECK(narrowed[0].solution == PellSolution(3, 1, 2));
    CHECK(narrowed[1].solution == PellSolution(17, 6, 2));
    CHECK(epsilon1_of(narrowed[0]) == qn(Rational(1), 2));
    CHECK(epsilon1_of(narrowed[1]) == qn(Rational(3, 4), 2));

    auto narrowed7 = candidates(7, 5, true);
    REQUIRE(narrowed7.size() == 2);
    CHECK(epsilon1_of(narrowed7[0]) == qn(Rational(8, 21), 7));
    CHECK(epsilon1_of(narrowed7[1]) == qn(Rational(127, 336), 7));

    auto open2 = candidates(2, 3, false);
    REQUIRE(open2.size() == 4);
    CHECK(open2[0].shape == ShapeKind::trivial);
    CHECK(open2[1].solution == PellSolution(3, 1, 2));
    CHECK(open2[3].solution == PellSolution(99, 35, 2));
}

TEST_CASE("excluded characteristics") {
    CHECK(excluded_characteristics(2) == std::vector<Integer>{2, 3});
    CHECK(excluded_characteristics(3) == std::vector<Integer>{2, 3, 7});
    CHECK(excluded_characteristics(7) == std::vector<Integer>{2, 3, 7, 127});
    CHECK_THROWS_AS(excluded_characteristics(4), std::invalid_argument);
}

TEST_CASE("second-solution shape identity and threshold order") {
    for (long d = 2; d <= 30; ++d) {
        if (is_perfect_square(Integer(d))) continue;
        CAPTURE(d);
        auto sols = pell_solutions(d, 2);
        const Integer &x0 = sols[0].x, &y0 = sols[0].y;
        CHECK(Rational(2 * y0, x0) == Rational(2 * sols[1].y, sols[1].x + 1));

        // middle piece of the second shape is d x0^2 (x - 2y0/x0)^2
        CrfCandidate second = h0_pell_shape(d, sols[1]);
        Rational lead(Integer(d) * x0 * x0);
        Rational root = Rational(2 * y0, x0);
        CHECK(second.h0.pieces()[1].a2 == lead);
        CHECK(second.h0.pieces()[1].a1 == -(Rational(2) * lead * root));
        CHECK(second.h0.pieces()[1].a0 == lead * root * root);

        QuadraticNumber eps0 = epsilon1_of(h0_pell_shape(d, sols[0]));
        QuadraticNumber eps1 = epsilon1_of(second);
        QuadraticNumber acc = QuadraticNumber::sqrt_multiple(Rational(1, Integer(d)), d);
        CHECK(eps1 < eps0);
        CHECK(acc < eps1);
    }
}

TEST_CASE("h1 is nonnegative and vanishes exactly from epsilon1 on") {
    for (long d : {2L, 3L, 7L, 9L}) {
        for (const auto& c : candidates(d, 2, false)) {
            PiecewisePolynomial h1 = h1_of(c);
            QuadraticNumber eps = epsilon1_of(c);
            // 120 rational samples across [0, eps_ceiling + 1]
            Rational hi(eps.floor_times(Integer(1)) + 2);
            for (int i = 0; i <= 120; ++i) {
                Rational x = hi * Rational(i, 120);
                Rational v = h1.eval(x);
                CHECK(v.sign() >= 0);
                if (eps.compare_to(x) != std::strong_ordering::greater) CHECK(v.is_zero());
            }
        }
    }
}
