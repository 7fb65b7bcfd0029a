#pragma once

#include <iosfwd>

#include "pellwall/rational.hpp"

namespace pellwall {

/// Numerical class v = (l^2 ch0, l ch1, ch2) of an object on a surface
/// polarized by l with l^2 = 2d. The third entry is kept rational: the
/// wall classes have ch2 = (x-1)/2, integral only because x is odd, and
/// storing it rational turns that oddness into a checkable assertion.
struct ChernVector {
    Integer v0, v1;
    Rational v2;
    long d;

    ChernVector(Integer v0_, Integer v1_, Rational v2_, long d_);

    /// True iff 2d divides both v0 and v1 (the lattice hypothesis under
    /// which every wall is Pell-parametrized).
    bool satisfies_divisibility() const;

    friend ChernVector operator+(const ChernVector& a, const ChernVector& b);
    friend ChernVector operator-(const ChernVector& a, const ChernVector& b);
    friend bool operator==(const ChernVector& a, const ChernVector& b) {
        return a.d == b.d && a.v0 == b.v0 && a.v1 == b.v1 && a.v2 == b.v2;
    }
    friend std::ostream& operator<<(std::ostream& os, const ChernVector& v);
};

/// Quadratic form v1^2 - 2 v0 v2; the support-property discriminant.
Rational discriminant(const ChernVector& v);

/// Class (2d, 0, -1) of the ideal sheaf of a point.
ChernVector ideal_point_class(long d);

/// Slope v1/v0, or +infinity for v0 = 0.
class SlopeValue {
public:
    static SlopeValue finite(Rational r) { return SlopeValue(false, std::move(r)); }
    static SlopeValue infinity() { return SlopeValue(true, Rational(0)); }

    bool is_infinite() const { return infinite_; }
    const Rational& value() const;

    friend bool operator==(const SlopeValue& a, const SlopeValue& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

private:
    SlopeValue(bool inf, Rational v) : infinite_(inf), value_(std::move(v)) {}
    bool infinite_;
    Rational value_;
};

SlopeValue slope(const ChernVector& v);

/// Euler characteristic of v twisted by x*l: (x^2/2) v0 + x v1 + v2.
Rational chi_twist(const ChernVector& v, const Rational& x);

/// Tilt slope nu_{beta,t}(v) with t playing the role of alpha^2:
///
///   [ v2 - beta v1 + ((beta^2 - t)/2) v0 ] / (v1 - beta v0)
///
/// Reported as infinite when only the denominator vanishes and as
/// degenerate when numerator and denominator both vanish (0/0 is a
/// different situation from a vertical wall, and is never folded in).
enum class TiltKind { finite, infinite, degenerate };

struct TiltSlope {
    TiltKind kind;
    Rational value;  // meaningful only when kind == finite

    static TiltSlope finite(Rational v) { return {TiltKind::finite, std::move(v)}; }
    static TiltSlope infinity() { return {TiltKind::infinite, Rational(0)}; }
    static TiltSlope degenerate() { return {TiltKind::degenerate, Rational(0)}; }

    friend bool operator==(const TiltSlope& a, const TiltSlope& b) {
        return a.kind == b.kind && (a.kind != TiltKind::finite || a.value == b.value);
    }
};

TiltSlope tilt_nu(const ChernVector& v, const Rational& beta, const Rational& t);

namespace detail {

/// Sign of the t-term in the tilt-slope numerator. `standard` is the
/// convention used throughout; `alpha_flipped` exists solely as a fault
/// injection hook for the convention validator tests.
enum class NuSign { standard, alpha_flipped };

TiltSlope tilt_nu_impl(const ChernVector& v, const Rational& beta, const Rational& t, NuSign sign);

}  // namespace detail

}  // namespace pellwall
