#include "pellwall/chern.hpp"

#include <ostream>
#include <stdexcept>

namespace pellwall {

ChernVector::ChernVector(Integer v0_, Integer v1_, Rational v2_, long d_)
    : v0(std::move(v0_)), v1(std::move(v1_)), v2(std::move(v2_)), d(d_) {
    if (d < 1) throw std::invalid_argument("ChernVector: d must be >= 1");
}

bool ChernVector::satisfies_divisibility() const {
    Integer twod = 2 * Integer(d);
    return v0 % twod == 0 && v1 % twod == 0;
}

namespace {
void require_same_d(const ChernVector& a, const ChernVector& b) {
    if (a.d != b.d) throw std::invalid_argument("ChernVector: mismatched polarization context");
}
}  // namespace

ChernVector operator+(const ChernVector& a, const ChernVector& b) {
    require_same_d(a, b);
    return ChernVector(a.v0 + b.v0, a.v1 + b.v1, a.v2 + b.v2, a.d);
}

ChernVector operator-(const ChernVector& a, const ChernVector& b) {
    require_same_d(a, b);
    return ChernVector(a.v0 - b.v0, a.v1 - b.v1, a.v2 - b.v2, a.d);
}

std::ostream& operator<<(std::ostream& os, const ChernVector& v) {
    return os << "(" << v.v0.get_str() << ", " << v.v1.get_str() << ", " << v.v2.str() << ")";
}

Rational discriminant(const ChernVector& v) {
    return Rational(v.v1 * v.v1) - Rational(2) * Rational(v.v0) * v.v2;
}

ChernVector ideal_point_class(long d) {
    return ChernVector(2 * Integer(d), 0, Rational(-1), d);
}

const Rational& SlopeValue::value() const {
    if (infinite_) throw std::domain_error("SlopeValue: +infinity has no rational value");
    return value_;
}

SlopeValue slope(const ChernVector& v) {
    if (v.v0 == 0) return SlopeValue::infinity();
    return SlopeValue::finite(Rational(v.v1, v.v0));
}

Rational chi_twist(const ChernVector& v, const Rational& x) {
    return x * x * Rational(v.v0, 2) + x * Rational(v.v1) + v.v2;
}

namespace detail {

TiltSlope tilt_nu_impl(const ChernVector& v, const Rational& beta, const Rational& t,
                       NuSign sign) {
    if (t.sign() < 0) throw std::invalid_argument("tilt_nu: t = alpha^2 must be >= 0");
    Rational tt = (sign == NuSign::standard) ? t : -t;
    Rational numerator =
        v.v2 - beta * Rational(v.v1) + (beta * beta - tt) * Rational(v.v0, 2);
    Rational denominator = Rational(v.v1) - beta * Rational(v.v0);
    if (denominator.is_zero()) {
        return numerator.is_zero() ? TiltSlope::degenerate() : TiltSlope::infinity();
    }
    return TiltSlope::finite(numerator / denominator);
}

}  // namespace detail

TiltSlope tilt_nu(const ChernVector& v, const Rational& beta, const Rational& t) {
    return detail::tilt_nu_impl(v, beta, t, detail::NuSign::standard);
}

}  // namespace pellwall
