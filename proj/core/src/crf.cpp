#include "pellwall/crf.hpp"

#include <algorithm>
#include <stdexcept>

namespace pellwall {

PiecewisePolynomial::PiecewisePolynomial(std::vector<QuadraticNumber> breakpoints,
                                         std::vector<QuadraticPolynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (pieces_.size() != breakpoints_.size() + 1)
        throw std::invalid_argument("PiecewisePolynomial: need one more piece than breakpoints");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i] < breakpoints_[i + 1]))
            throw std::invalid_argument("PiecewisePolynomial: breakpoints must increase strictly");
    }
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (!(pieces_[i].eval(breakpoints_[i]) == pieces_[i + 1].eval(breakpoints_[i])))
            throw std::invalid_argument("PiecewisePolynomial: discontinuous at a breakpoint");
    }
}

std::size_t PiecewisePolynomial::piece_index(const Rational& x) const {
    std::size_t i = 0;
    while (i < breakpoints_.size() &&
           breakpoints_[i].compare_to(x) != std::strong_ordering::greater)
        ++i;
    return i;  // piece owning [b_i, b_{i+1})
}

Rational PiecewisePolynomial::eval(const Rational& x) const {
    if (x.sign() < 0) throw std::domain_error("PiecewisePolynomial: domain is x >= 0");
    return pieces_[piece_index(x)].eval(x);
}

bool PiecewisePolynomial::is_c1_at(const QuadraticNumber& x0) const {
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (breakpoints_[i] == x0) {
            const QuadraticPolynomial& left = pieces_[i];
            const QuadraticPolynomial& right = pieces_[i + 1];
            return left.eval(x0) == right.eval(x0) &&
                   left.derivative_at(x0) == right.derivative_at(x0);
        }
    }
    throw std::invalid_argument("is_c1_at: x0 is not a breakpoint");
}

bool operator==(const PiecewisePolynomial& f, const PiecewisePolynomial& g) {
    return f.breakpoints_ == g.breakpoints_ && f.pieces_ == g.pieces_;
}

namespace {

QuadraticPolynomial chi_tail(long d) { return {Rational(Integer(d)), Rational(0), Rational(-1)}; }

// Construction-time checks shared by every candidate: h0 >= 0,
// nondecreasing and convex on x >= 0, tail identically d x^2 - 1.
// Convexity and monotonicity reduce to coefficient and breakpoint-value
// facts because each derivative is linear.
void validate_candidate(const CrfCandidate& c) {
    const auto& pieces = c.h0.pieces();
    const auto& bps = c.h0.breakpoints();
    if (!(pieces.back() == chi_tail(c.d)))
        throw std::logic_error("CrfCandidate: tail is not d x^2 - 1");
    for (const auto& p : pieces)
        if (p.a2.sign() < 0) throw std::logic_error("CrfCandidate: concave piece");
    if (pieces.front().eval(Rational(0)).sign() < 0 ||
        pieces.front().derivative_at(Rational(0)).sign() < 0)
        throw std::logic_error("CrfCandidate: negative or decreasing at 0");
    for (std::size_t i = 0; i < bps.size(); ++i) {
        QuadraticNumber left = pieces[i].derivative_at(bps[i]);
        QuadraticNumber right = pieces[i + 1].derivative_at(bps[i]);
        if ((right - left).sign() < 0)
            throw std::logic_error("CrfCandidate: derivative drops across a breakpoint");
        if (left.sign() < 0)
            throw std::logic_error("CrfCandidate: decreasing before a breakpoint");
    }
}

}  // namespace

CrfCandidate h0_square_shape(long d) {
    if (d < 1) throw std::invalid_argument("h0_square_shape: d must be >= 1");
    bool square = is_perfect_square(Integer(d));
    QuadraticNumber breakpoint = QuadraticNumber::sqrt_multiple(Rational(1, Integer(d)), d);
    PiecewisePolynomial h0({breakpoint}, {QuadraticPolynomial::zero(), chi_tail(d)});
    CrfCandidate c{d, square ? ShapeKind::perfect_square : ShapeKind::trivial, std::nullopt,
                   std::move(h0)};
    validate_candidate(c);
    return c;
}

CrfCandidate h0_pell_shape(long d, const PellSolution& s) {
    if (s.d != d) throw std::invalid_argument("h0_pell_shape: solution belongs to another d");
    if (s.is_trivial()) throw std::invalid_argument("h0_pell_shape: solution must be nontrivial");
    Integer dd(d);
    QuadraticPolynomial middle{Rational(dd * (s.x + 1), 2), Rational(-2 * dd * s.y),
                               Rational(s.x - 1, 2)};
    QuadraticNumber b1 = QuadraticNumber::from_rational(Rational(2 * s.y, s.x + 1), dd);
    QuadraticNumber b2 = QuadraticNumber::from_rational(Rational(2 * s.y, s.x - 1), dd);
    PiecewisePolynomial h0({b1, b2}, {QuadraticPolynomial::zero(), middle, chi_tail(d)});
    CrfCandidate c{d, ShapeKind::pell, s, std::move(h0)};
    validate_candidate(c);
    return c;
}

PiecewisePolynomial h1_of(const CrfCandidate& c) {
    std::vector<QuadraticPolynomial> pieces;
    pieces.reserve(c.h0.pieces().size());
    for (const auto& p : c.h0.pieces()) pieces.push_back(p - chi_tail(c.d));
    return PiecewisePolynomial(c.h0.breakpoints(), std::move(pieces));
}

QuadraticNumber epsilon1_of(const CrfCandidate& c) { return c.h0.breakpoints().back(); }

std::vector<CrfCandidate> candidates(long d, int n_solutions, bool apply_char_narrowing) {
    if (d < 1) throw std::invalid_argument("candidates: d must be >= 1");
    std::vector<CrfCandidate> out;
    if (is_perfect_square(Integer(d))) {
        out.push_back(h0_square_shape(d));
        return out;
    }
    if (apply_char_narrowing) {
        for (const PellSolution& s : pell_solutions(d, 2)) out.push_back(h0_pell_shape(d, s));
        return out;
    }
    out.push_back(h0_square_shape(d));
    for (const PellSolution& s : pell_solutions(d, n_solutions))
        out.push_back(h0_pell_shape(d, s));
    return out;
}

std::vector<Integer> excluded_characteristics(long d) {
    auto minimal = pell_minimal(d, /*certify_bound=*/0);
    if (!minimal)
        throw std::invalid_argument("excluded_characteristics: d must not be a perfect square");
    const Integer& x0 = minimal->x;
    std::vector<Integer> primes = prime_divisors(x0);
    for (const Integer& p : prime_divisors(x0 - 1)) primes.push_back(p);
    for (const Integer& p : prime_divisors(x0 + 1)) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

}  // namespace pellwall
