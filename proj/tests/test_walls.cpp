#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pellwall/walls.hpp"

using namespace pellwall;

TEST_CASE("pell_to_pair substitutions") {
    auto p2 = pell_to_pair(2, PellSolution(3, 1, 2));
    CHECK(p2.sub == ChernVector(8, -4, Rational(1), 2));
    CHECK(p2.quot == ChernVector(-4, 4, Rational(-2), 2));

    auto p3 = pell_to_pair(3, PellSolution(7, 2, 3));
    CHECK(p3.sub == ChernVector(24, -12, Rational(3), 3));
    CHECK(p3.quot == ChernVector(-18, 12, Rational(-4), 3));

    auto p17 = pell_to_pair(2, PellSolution(17, 6, 2));
    CHECK(p17.sub == ChernVector(36, -24, Rational(8), 2));
    CHECK(p17.quot == ChernVector(-32, 24, Rational(-9), 2));

    CHECK_THROWS_AS(pell_to_pair(2, PellSolution::trivial(2)), std::invalid_argument);
    CHECK_THROWS_AS(pell_to_pair(3, PellSolution(3, 1, 2)), std::invalid_argument);
}

TEST_CASE("destabilizing pair invariants hold on construction") {
    for (long d : {2L, 3L, 5L, 6L, 7L}) {
        for (const auto& s : pell_solutions(d, 4)) {
            DestabilizingPair pair = pell_to_pair(d, s);
            CHECK(pair.sub + pair.quot == ideal_point_class(d));
            CHECK(discriminant(pair.sub).is_zero());
            CHECK(discriminant(pair.quot).is_zero());
            CHECK(pair.sub.v0 > 0);
            CHECK(pair.sub.v1 < 0);
        }
    }
    // a corrupted pair must be rejected
    CHECK_THROWS_AS(DestabilizingPair(ChernVector(8, -4, Rational(1), 2),
                                      ChernVector(-4, 4, Rational(-1), 2),
                                      PellSolution(3, 1, 2)),
                    std::invalid_argument);
}

TEST_CASE("wall between the ideal point class and a wall class") {
    ChernVector ipc = ideal_point_class(2);
    ChernVector sub(8, -4, Rational(1), 2);
    Wall w = wall_between(ipc, sub);
    CHECK(w.center_beta == Rational(-3, 4));
    CHECK(w.radius_sq == Rational(1, 16));
    auto [pq, ps] = w.rational_endpoints();
    CHECK(pq == Rational(-1));
    CHECK(ps == Rational(-1, 2));

    // sub and quot cut the same semicircle
    ChernVector quot(-4, 4, Rational(-2), 2);
    CHECK(wall_between(ipc, quot) == w);
    CHECK(wall_between(sub, quot) == w);
}

TEST_CASE("wall_between error taxonomy") {
    ChernVector a(2, 0, Rational(-1), 2);
    ChernVector b(4, 0, Rational(-2), 2);
    CHECK_THROWS_WITH_AS((void)wall_between(a, b),
                         "wall_between: proportional classes have equal slope everywhere",
                         WallError);
    try {
        (void)wall_between(a, b);
    } catch (const WallError& e) {
        CHECK(e.kind() == WallError::Kind::proportional);
    }
    // vertical locus: same (v0, v1) ray, different chi
    ChernVector c(2, 0, Rational(0), 2);
    try {
        (void)wall_between(a, c);
        FAIL("expected WallError");
    } catch (const WallError& e) {
        CHECK(e.kind() == WallError::Kind::not_semicircle);
    }
    // radius^2 <= 0: nothing in t > 0
    ChernVector u(2, 0, Rational(-1), 2);
    ChernVector w2(0, 2, Rational(1), 2);
    try {
        (void)wall_between(u, w2);
        FAIL("expected WallError");
    } catch (const WallError& e) {
        CHECK(e.kind() == WallError::Kind::empty_locus);
    }
}

TEST_CASE("endpoint formula matches wall_between") {
    CHECK(wall_endpoints_formula(PellSolution(3, 1, 2)) ==
          std::pair{Rational(-1), Rational(-1, 2)});
    CHECK(wall_endpoints_formula(PellSolution(7, 2, 3)) ==
          std::pair{Rational(-2, 3), Rational(-1, 2)});
    CHECK(wall_endpoints_formula(PellSolution(17, 6, 2)) ==
          std::pair{Rational(-3, 4), Rational(-2, 3)});

    for (long d : {2L, 3L, 5L, 7L, 11L}) {
        ChernVector ipc = ideal_point_class(d);
        for (const auto& s : pell_solutions(d, 5)) {
            CAPTURE(d);
            Wall w = wall_between(ipc, pell_to_pair(d, s).sub);
            CHECK(w.rational_endpoints() == wall_endpoints_formula(s));
        }
    }
}

TEST_CASE("enumerate_walls nests around the accumulation point") {
    auto walls = enumerate_walls(2, 2);
    REQUIRE(walls.size() == 2);
    CHECK(walls[0].first == PellSolution(3, 1, 2));
    CHECK(walls[0].second.rational_endpoints() == std::pair{Rational(-1), Rational(-1, 2)});
    CHECK(walls[1].first == PellSolution(17, 6, 2));
    CHECK(walls[1].second.rational_endpoints() ==
          std::pair{Rational(-3, 4), Rational(-2, 3)});

    CHECK(enumerate_walls(2, 0).empty());
    CHECK(enumerate_walls(9, 3).empty());

    // first interval straddles -sqrt(2)/2
    QuadraticNumber acc = QuadraticNumber::sqrt_multiple(Rational(-1, 2), 2);
    auto [pq, ps] = walls[0].second.rational_endpoints();
    CHECK(acc.compare_to(pq) == std::strong_ordering::greater);
    CHECK(acc.compare_to(ps) == std::strong_ordering::less);
}

TEST_CASE("brute-force scan agrees with the Pell parametrization") {
    auto scanned = bruteforce_wall_scan(2, 6);
    REQUIRE(scanned.size() == 2);
    CHECK(scanned[0] == pell_to_pair(2, PellSolution(3, 1, 2)));
    CHECK(scanned[1] == pell_to_pair(2, PellSolution(17, 6, 2)));

    CHECK(bruteforce_wall_scan(4, 50).empty());
    CHECK(bruteforce_wall_scan(3, 1).empty());

    for (long d = 2; d <= 10; ++d) {
        CAPTURE(d);
        std::vector<DestabilizingPair> expected;
        if (!is_perfect_square(Integer(d))) {
            for (int n = 1;; ++n) {
                auto sols = pell_solutions(d, n);
                if (sols.back().y > 50) break;
                expected.push_back(pell_to_pair(d, sols.back()));
            }
        }
        CHECK(bruteforce_wall_scan(d, 50) == expected);
    }
}

TEST_CASE("sign-flipped convention is rejected by the wall validator") {
    ChernVector ipc = ideal_point_class(2);
    ChernVector sub(8, -4, Rational(1), 2);
    CHECK_THROWS_AS(
        (void)detail::wall_between_impl(ipc, sub, pellwall::detail::NuSign::alpha_flipped),
        WallError);
    // and under the standard convention the right endpoint is the sub slope
    Wall w = detail::wall_between_impl(ipc, sub, pellwall::detail::NuSign::standard);
    CHECK(w.rational_endpoints().second == slope(sub).value());
}
