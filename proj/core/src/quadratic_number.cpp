#include "pellwall/quadratic_number.hpp"

#include <ostream>
#include <stdexcept>

namespace pellwall {

QuadraticNumber::QuadraticNumber(Rational a, Rational b, Integer rad)
    : a_(std::move(a)), b_(std::move(b)), rad_(std::move(rad)) {
    if (rad_ < 1) throw std::invalid_argument("QuadraticNumber: radicand must be >= 1");
    Integer root;
    if (!b_.is_zero() && is_perfect_square(rad_, root)) {
        a_ += b_ * Rational(root);
        b_ = Rational(0);
    }
}

const Rational& QuadraticNumber::as_rational() const {
    if (!is_rational()) throw std::domain_error("QuadraticNumber: value is irrational");
    return a_;
}

int QuadraticNumber::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    int sa = a_.sign(), sb = b_.sign();
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 * rad; equality would force
    // sqrt(rad) rational, which normalization has already excluded.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(rad_);
    auto c = lhs <=> rhs;
    if (c == std::strong_ordering::equal) return 0;
    return (c == std::strong_ordering::greater) ? sa : sb;
}

QuadraticNumber QuadraticNumber::squared() const { return *this * *this; }

namespace {
void require_same_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.rad() != y.rad())
        throw std::invalid_argument("QuadraticNumber: mismatched radicand context");
}
}  // namespace

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    require_same_radicand(x, y);
    return QuadraticNumber(x.a_ + y.a_, x.b_ + y.b_, x.rad_);
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    require_same_radicand(x, y);
    return QuadraticNumber(x.a_ - y.a_, x.b_ - y.b_, x.rad_);
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    require_same_radicand(x, y);
    return QuadraticNumber(x.a_ * y.a_ + x.b_ * y.b_ * Rational(x.rad_),
                           x.a_ * y.b_ + x.b_ * y.a_, x.rad_);
}

std::strong_ordering QuadraticNumber::compare(const QuadraticNumber& x, const QuadraticNumber& y) {
    require_same_radicand(x, y);
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
           : s > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
}

std::string QuadraticNumber::str() const {
    if (is_rational()) return a_.str();
    std::string out;
    if (!a_.is_zero()) out += a_.str();
    if (b_.sign() > 0 && !a_.is_zero()) out += "+";
    if (b_ == Rational(-1)) {
        out += "-";
    } else if (!(b_ == Rational(1))) {
        out += b_.str() + "*";
    }
    out += "sqrt(" + rad_.get_str() + ")";
    return out;
}

Integer QuadraticNumber::floor_times(const Integer& scale) const {
    if (scale <= 0) throw std::invalid_argument("QuadraticNumber::floor_times: scale must be > 0");
    // value * scale = (t + u*sqrt(rad)) / R with R > 0. Since u*sqrt(rad) is
    // irrational whenever u != 0, floor((t + u sqrt(rad))/R) equals
    // floor((t + floor(u sqrt(rad)))/R): the fractional part can never push
    // the sum across the next multiple of R.
    Integer t = a_.num() * b_.den() * scale;
    Integer u = b_.num() * a_.den() * scale;
    Integer R = a_.den() * b_.den();
    Integer fl;
    if (u >= 0) {
        fl = isqrt(u * u * rad_);
    } else {
        fl = -isqrt(u * u * rad_) - 1;
    }
    Integer result;
    mpz_fdiv_q(result.get_mpz_t(), Integer(t + fl).get_mpz_t(), R.get_mpz_t());
    return result;
}

std::string QuadraticNumber::decimal(int digits) const {
    if (is_rational()) return a_.decimal(digits);
    Integer pow10 = 1;
    for (int i = 0; i < digits + 1; ++i) pow10 *= 10;
    int sgn = sign();
    Integer scaled = (sgn < 0 ? -*this : *this).floor_times(pow10);
    return decimal_of_scaled(scaled, sgn < 0, digits);
}

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x) { return os << x.str(); }

}  // namespace pellwall
