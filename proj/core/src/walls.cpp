#include "pellwall/walls.hpp"

#include <sstream>

namespace pellwall {

Wall::Wall(Rational center, Rational radius_squared)
    : center_beta(std::move(center)),
      radius_sq(std::move(radius_squared)),
      p_quot(QuadraticNumber::from_rational(0, 1)),
      p_sub(QuadraticNumber::from_rational(0, 1)) {
    if (radius_sq.sign() <= 0)
        throw WallError(WallError::Kind::empty_locus, "wall: radius^2 must be positive");
    // sqrt(p/q) = sqrt(p q)/q, with p q a perfect square iff the radius is
    // rational (p/q canonical makes num and den separately square then).
    Integer rad = radius_sq.num() * radius_sq.den();
    QuadraticNumber root = QuadraticNumber::sqrt_multiple(Rational(1, radius_sq.den()), rad);
    QuadraticNumber c = QuadraticNumber::from_rational(center_beta, rad);
    p_quot = c - root;
    p_sub = c + root;
    // Redundant storage: endpoints must reproduce center and radius^2.
    if (!((p_sub - c).squared() == QuadraticNumber::from_rational(radius_sq, rad)))
        throw std::logic_error("wall: endpoint/radius consistency violated");
}

DestabilizingPair::DestabilizingPair(ChernVector sub_, ChernVector quot_, PellSolution solution_)
    : sub(std::move(sub_)), quot(std::move(quot_)), solution(std::move(solution_)) {
    const ChernVector expected_sum = ideal_point_class(sub.d);
    if (!(sub + quot == expected_sum))
        throw std::invalid_argument("DestabilizingPair: sub + quot != ideal point class");
    if (!discriminant(sub).is_zero() || !discriminant(quot).is_zero())
        throw std::invalid_argument("DestabilizingPair: both discriminants must vanish");
    if (sub.v0 <= 0) throw std::invalid_argument("DestabilizingPair: sub must have positive rank");
    if (sub.v1 >= 0) throw std::invalid_argument("DestabilizingPair: sub must have negative slope");
}

DestabilizingPair pell_to_pair(long d, const PellSolution& s) {
    if (s.d != d) throw std::invalid_argument("pell_to_pair: solution belongs to another d");
    if (s.is_trivial()) throw std::invalid_argument("pell_to_pair: solution must be nontrivial");
    if (s.x % 2 == 0) throw std::invalid_argument("pell_to_pair: corrupt solution, x is even");
    Integer dd(d);
    ChernVector sub(dd * (s.x + 1), -2 * dd * s.y, Rational(s.x - 1, 2), d);
    ChernVector quot((1 - s.x) * dd, 2 * dd * s.y, Rational(-(s.x + 1), 2), d);
    return DestabilizingPair(std::move(sub), std::move(quot), s);
}

namespace detail {

Wall wall_between_impl(const ChernVector& u, const ChernVector& w, pellwall::detail::NuSign sign) {
    if (u.d != w.d) throw std::invalid_argument("wall_between: mismatched polarization context");
    // Cross-multiplying nu(u) = nu(w) and collecting the t terms leaves
    //   (A/2) (beta^2 -+ t) - A beta^2 + B beta - C = 0
    // with the 2x2 minors A = u0 w1 - u1 w0, B = u0 w2 - u2 w0,
    // C = u1 w2 - u2 w1. Solving for t gives t = sigma (-beta^2 + 2(B/A) beta - 2C/A).
    Rational r_u0(u.v0), r_u1(u.v1);
    Rational r_w0(w.v0), r_w1(w.v1);
    Rational A = r_u0 * r_w1 - r_u1 * r_w0;
    Rational B = r_u0 * w.v2 - u.v2 * r_w0;
    Rational C = r_u1 * w.v2 - u.v2 * r_w1;
    if (A.is_zero() && B.is_zero() && C.is_zero())
        throw WallError(WallError::Kind::proportional,
                        "wall_between: proportional classes have equal slope everywhere");
    if (A.is_zero())
        throw WallError(WallError::Kind::not_semicircle,
                        "wall_between: locus is a vertical line, not a semicircle");
    // Leading coefficient of t(beta); a wall needs the parabola to open
    // downward, i.e. coefficient -1.
    Rational lead = (sign == pellwall::detail::NuSign::standard) ? Rational(-1) : Rational(1);
    if (lead.sign() >= 0)
        throw WallError(WallError::Kind::not_semicircle,
                        "wall_between: locus opens upward, not a semicircle");
    Rational center = B / A;
    Rational radius_sq = center * center - Rational(2) * C / A;
    if (radius_sq.sign() <= 0)
        throw WallError(WallError::Kind::empty_locus,
                        "wall_between: locus carries no point with t > 0");
    return Wall(std::move(center), std::move(radius_sq));
}

}  // namespace detail

Wall wall_between(const ChernVector& u, const ChernVector& w) {
    return detail::wall_between_impl(u, w, pellwall::detail::NuSign::standard);
}

std::pair<Rational, Rational> wall_endpoints_formula(const PellSolution& s) {
    if (s.is_trivial())
        throw std::invalid_argument("wall_endpoints_formula: solution must be nontrivial");
    return {Rational(-2 * s.y, s.x - 1), Rational(-2 * s.y, s.x + 1)};
}

std::vector<std::pair<PellSolution, Wall>> enumerate_walls(long d, int n) {
    std::vector<std::pair<PellSolution, Wall>> out;
    if (n <= 0) return out;
    if (is_perfect_square(Integer(d))) return out;
    const ChernVector ipc = ideal_point_class(d);
    const QuadraticNumber accumulation =
        QuadraticNumber::sqrt_multiple(Rational(-1, Integer(d)), Integer(d));
    for (const PellSolution& s : pell_solutions(d, n)) {
        DestabilizingPair pair = pell_to_pair(d, s);
        Wall wall = wall_between(ipc, pair.sub);
        if (!wall.endpoints_rational())
            throw std::logic_error("enumerate_walls: Pell wall with irrational endpoints");
        auto [p_quot, p_sub] = wall.rational_endpoints();
        if (p_sub.sign() >= 0)
            throw std::logic_error("enumerate_walls: wall leaves the beta < 0 half-plane");
        // Strict nesting inside the previous wall, accumulating on -sqrt(d)/d.
        if (!out.empty()) {
            auto [prev_quot, prev_sub] = out.back().second.rational_endpoints();
            if (!(prev_quot < p_quot && p_sub < prev_sub))
                throw std::logic_error("enumerate_walls: walls failed to nest strictly");
        }
        if (!(accumulation.compare_to(p_quot) == std::strong_ordering::greater &&
              accumulation.compare_to(p_sub) == std::strong_ordering::less))
            throw std::logic_error("enumerate_walls: endpoint interval misses -sqrt(d)/d");
        out.emplace_back(s, std::move(wall));
    }
    return out;
}

std::vector<DestabilizingPair> bruteforce_wall_scan(long d, long c_bound) {
    std::vector<DestabilizingPair> out;
    Integer dd(d);
    for (long c = 1; c <= c_bound; ++c) {
        // Delta(sub) = 0 with the sum rule forces (2 chi + 1)^2 = 4 d c^2 + 1;
        // scan c and test that square condition directly.
        Integer candidate = 4 * dd * Integer(c) * Integer(c) + 1;
        Integer root;
        if (!is_perfect_square(candidate, root)) continue;
        Integer chi = (root - 1) / 2;
        Integer r = chi + 1;
        ChernVector sub(2 * dd * r, -2 * dd * Integer(c), Rational(chi), d);
        ChernVector quot = ideal_point_class(d) - sub;
        if (!discriminant(sub).is_zero() || !discriminant(quot).is_zero()) continue;
        out.emplace_back(std::move(sub), std::move(quot), PellSolution(root, Integer(c), d));
    }
    return out;
}

}  // namespace pellwall
