#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "pellwall/chern.hpp"
#include "pellwall/pell.hpp"
#include "pellwall/quadratic_number.hpp"

namespace pellwall {

/// Structured failure of wall_between: the equal-tilt-slope locus exists
/// for any two classes, but it is a semicircular wall only in the generic
/// situation. The three non-wall outcomes stay distinguishable.
class WallError : public std::runtime_error {
public:
    enum class Kind {
        proportional,    // classes span a line: equal slope everywhere
        not_semicircle,  // locus is a vertical line or opens upward
        empty_locus,     // semicircle has radius^2 <= 0: nothing in t > 0
    };

    WallError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Numerical wall in the (beta, t = alpha^2) half-plane: the locus
/// t = -(beta - center)^2 + radius_sq. Stored redundantly as center and
/// radius^2 plus the two t = 0 endpoints; consistency is asserted on
/// construction. Endpoints are elements of Q(sqrt(.)) in general and
/// collapse to rationals exactly when radius_sq is a rational square,
/// which is the case for every Pell-parametrized wall.
struct Wall {
    Rational center_beta;
    Rational radius_sq;
    QuadraticNumber p_quot;  // left endpoint,  center - sqrt(radius_sq)
    QuadraticNumber p_sub;   // right endpoint, center + sqrt(radius_sq)

    Wall(Rational center, Rational radius_squared);

    bool endpoints_rational() const { return p_quot.is_rational() && p_sub.is_rational(); }
    std::pair<Rational, Rational> rational_endpoints() const {
        return {p_quot.as_rational(), p_sub.as_rational()};
    }

    friend bool operator==(const Wall& a, const Wall& b) {
        return a.center_beta == b.center_beta && a.radius_sq == b.radius_sq;
    }
};

/// The destabilizing pair of wall classes attached to a Pell
/// solution: sub + quot = ideal_point_class(d), both discriminant zero,
/// sub of positive rank and negative slope. All checked on construction.
struct DestabilizingPair {
    ChernVector sub;
    ChernVector quot;
    PellSolution solution;

    DestabilizingPair(ChernVector sub, ChernVector quot, PellSolution solution);

    friend bool operator==(const DestabilizingPair& a, const DestabilizingPair& b) {
        return a.sub == b.sub && a.quot == b.quot && a.solution == b.solution;
    }
};

/// sub = (d(x+1), -2dy, (x-1)/2), quot = ((1-x)d, 2dy, -(x+1)/2) for a
/// nontrivial solution (x, y) of x^2 - 4d y^2 = 1.
DestabilizingPair pell_to_pair(long d, const PellSolution& s);

/// Wall where u and w have equal tilt slope, solved exactly as a quadratic
/// relation t(beta). Throws WallError when the locus is not a semicircle.
Wall wall_between(const ChernVector& u, const ChernVector& w);

/// Closed-form endpoints (-2y/(x-1), -2y/(x+1)) of the wall attached to a
/// Pell solution; must agree exactly with wall_between against the
/// ideal-point class.
std::pair<Rational, Rational> wall_endpoints_formula(const PellSolution& s);

/// Walls of the ideal-point class for the first n positive solutions,
/// largest wall (minimal solution) first. Verifies strict nesting and that
/// every endpoint interval contains -sqrt(d)/d strictly.
std::vector<std::pair<PellSolution, Wall>> enumerate_walls(long d, int n);

/// Independent oracle inverting the wall conditions as a search: scans
/// slopes c in [-c_bound, -1], derives the remaining entries from the
/// discriminant-zero and sum constraints, and keeps the integral hits.
/// Returns exactly the Pell-parametrized pairs with y <= c_bound.
std::vector<DestabilizingPair> bruteforce_wall_scan(long d, long c_bound);

namespace detail {
/// Fault-injectable implementation: wall_between under either tilt-slope
/// sign convention. Used by the mutation tests; production code always
/// goes through wall_between.
Wall wall_between_impl(const ChernVector& u, const ChernVector& w, pellwall::detail::NuSign sign);
}  // namespace detail

}  // namespace pellwall
