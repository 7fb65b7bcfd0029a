#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pellwall/integer.hpp"

namespace pellwall {

/// Exact rational number in canonical form: denominator > 0 and
/// gcd(|num|, den) = 1, restored eagerly after every operation.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer num, Integer den);

    /// Parses "p/q", "p", or a plain decimal like "0.75" (kept exact).
    static Rational from_string(std::string_view s);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return mpz_sgn(num_.get_mpz_t()); }

    Rational abs() const { return num_ >= 0 ? *this : -*this; }
    Integer floor() const;

    /// "p/q", or just "p" when the value is an integer.
    std::string str() const;

    /// Fixed-point decimal rendering with `digits` fractional digits,
    /// rounded half away from zero. Deterministic.
    std::string decimal(int digits = 12) const;

    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, raw{}); }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    struct raw {};  // tag: inputs already canonical
    Rational(Integer num, Integer den, raw) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    Integer num_, den_;
};

/// Decimal rendering of value/1 scaled by sqrt factors is provided by
/// QuadraticNumber; this helper rounds an exact integer quotient num/den
/// to `digits` fractional digits (used by both).
std::string decimal_of_scaled(const Integer& scaled_floor_next_digit, bool negative, int digits);

}  // namespace pellwall
