#pragma once

#include <optional>
#include <vector>

#include "pellwall/pell.hpp"
#include "pellwall/quadratic_number.hpp"

namespace pellwall {

/// a2 x^2 + a1 x + a0 with exact rational coefficients.
struct QuadraticPolynomial {
    Rational a2, a1, a0;

    static QuadraticPolynomial zero() { return {Rational(0), Rational(0), Rational(0)}; }

    Rational eval(const Rational& x) const { return a2 * x * x + a1 * x + a0; }
    QuadraticNumber eval(const QuadraticNumber& x) const {
        return Rational(a2) * x.squared() + a1 * x +
               QuadraticNumber::from_rational(a0, x.rad());
    }
    Rational derivative_at(const Rational& x) const { return Rational(2) * a2 * x + a1; }
    QuadraticNumber derivative_at(const QuadraticNumber& x) const {
        return (Rational(2) * a2) * x + QuadraticNumber::from_rational(a1, x.rad());
    }

    bool is_zero() const { return a2.is_zero() && a1.is_zero() && a0.is_zero(); }

    friend QuadraticPolynomial operator-(const QuadraticPolynomial& p,
                                         const QuadraticPolynomial& q) {
        return {p.a2 - q.a2, p.a1 - q.a1, p.a0 - q.a0};
    }
    friend bool operator==(const QuadraticPolynomial& p, const QuadraticPolynomial& q) {
        return p.a2 == q.a2 && p.a1 == q.a1 && p.a0 == q.a0;
    }
};

/// Piecewise quadratic on x >= 0 with strictly increasing breakpoints in
/// Q(sqrt(d)) and one more piece than breakpoints. Pieces own half-open
/// intervals [b_i, b_{i+1}) for evaluation; continuity across breakpoints
/// is checked exactly on construction, so endpoint ownership is
/// unobservable in values.
class PiecewisePolynomial {
public:
    PiecewisePolynomial(std::vector<QuadraticNumber> breakpoints,
                        std::vector<QuadraticPolynomial> pieces);

    const std::vector<QuadraticNumber>& breakpoints() const { return breakpoints_; }
    const std::vector<QuadraticPolynomial>& pieces() const { return pieces_; }

    std::size_t piece_index(const Rational& x) const;
    Rational eval(const Rational& x) const;

    /// Exact left/right match of value and first derivative at a
    /// breakpoint; throws if x0 is not a breakpoint.
    bool is_c1_at(const QuadraticNumber& x0) const;

    friend bool operator==(const PiecewisePolynomial& f, const PiecewisePolynomial& g);

private:
    std::vector<QuadraticNumber> breakpoints_;
    std::vector<QuadraticPolynomial> pieces_;
};

enum class ShapeKind {
    perfect_square,  // d square: 0, then d x^2 - 1 after sqrt(d)/d
    trivial,         // d non-square, same function, no destabilization
    pell,            // d non-square, middle piece from a Pell solution
};

/// One candidate h^0 function of the ideal-point sheaf; h^1 and the
/// threshold derive from it. Nonnegativity, monotonicity, convexity and
/// the d x^2 - 1 tail are enforced at construction.
struct CrfCandidate {
    long d;
    ShapeKind shape;
    std::optional<PellSolution> solution;  // engaged iff shape == pell
    PiecewisePolynomial h0;
};

/// The no-destabilization shape: 0 on [0, sqrt(d)/d], then d x^2 - 1.
/// Shape tag is perfect_square or trivial depending on d.
CrfCandidate h0_square_shape(long d);

/// The destabilized shape for a Pell solution (x, y): zero up to
/// 2y/(x+1), the wall piece d(x+1)/2 t^2 - 2dy t + (x-1)/2 up to
/// 2y/(x-1), then d t^2 - 1.
CrfCandidate h0_pell_shape(long d, const PellSolution& s);

/// h^1 = h^0 - chi on x > 0, same breakpoints.
PiecewisePolynomial h1_of(const CrfCandidate& c);

/// Basepoint-freeness threshold of the candidate: the last breakpoint,
/// where h^1 becomes identically zero.
QuadraticNumber epsilon1_of(const CrfCandidate& c);

/// The candidate list for d. Perfect squares admit exactly the square
/// shape. Otherwise: without narrowing, the trivial shape plus the shapes
/// of the first n_solutions solutions; with narrowing (valid away from
/// excluded_characteristics), exactly the shapes of the two smallest
/// solutions.
std::vector<CrfCandidate> candidates(long d, int n_solutions, bool apply_char_narrowing);

/// Primes dividing x0 or x0^2 - 1 for the minimal solution: the
/// characteristics in which the narrowing argument is not available.
std::vector<Integer> excluded_characteristics(long d);

}  // namespace pellwall
