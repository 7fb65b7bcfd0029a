#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "pellwall/rational.hpp"

namespace pellwall {

/// Exact element a + b*sqrt(rad) of the real quadratic field Q(sqrt(rad)),
/// rad >= 1 an integer kept as explicit context (it is NOT reduced to a
/// squarefree radicand: constants like sqrt(d)/d are stated for the raw d).
/// When rad is a perfect square the value is normalized to b = 0, so
/// equality and ordering are decidable by sign analysis alone.
class QuadraticNumber {
public:
    QuadraticNumber(Rational a, Rational b, Integer rad);

    static QuadraticNumber from_rational(Rational a, Integer rad) {
        return QuadraticNumber(std::move(a), Rational(0), std::move(rad));
    }
    /// b * sqrt(rad)
    static QuadraticNumber sqrt_multiple(Rational b, Integer rad) {
        return QuadraticNumber(Rational(0), std::move(b), std::move(rad));
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Integer& rad() const { return rad_; }

    bool is_rational() const { return b_.is_zero(); }
    /// Throws unless is_rational().
    const Rational& as_rational() const;

    /// Exact sign of the real value (-1, 0, +1), squaring only when the
    /// rational and irrational parts have opposite signs.
    int sign() const;

    QuadraticNumber squared() const;

    /// floor(value * scale) computed exactly (integer square roots only).
    /// Requires scale > 0.
    Integer floor_times(const Integer& scale) const;

    std::string str() const;
    /// Fixed-point decimal with `digits` fractional digits; exact floor of
    /// the irrational part via integer square roots, then round half up.
    std::string decimal(int digits = 12) const;

    friend QuadraticNumber operator-(const QuadraticNumber& x) {
        return QuadraticNumber(-x.a_, -x.b_, x.rad_);
    }
    friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator*(const Rational& c, const QuadraticNumber& x) {
        return QuadraticNumber(c * x.a_, c * x.b_, x.rad_);
    }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
        return compare(x, y) == std::strong_ordering::equal;
    }
    friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
        return compare(x, y);
    }

    /// Total order consistent with the real embedding sqrt(rad) > 0.
    /// Throws std::invalid_argument when the radicand contexts differ.
    static std::strong_ordering compare(const QuadraticNumber& x, const QuadraticNumber& y);

    std::strong_ordering compare_to(const Rational& r) const {
        return compare(*this, from_rational(r, rad_));
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x);

private:
    Rational a_, b_;
    Integer rad_;
};

}  // namespace pellwall
