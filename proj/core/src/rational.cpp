#include "pellwall/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace pellwall {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    canonicalize();
}

void Rational::canonicalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        Integer n(std::string(s.substr(0, slash)), 10);
        Integer d(std::string(s.substr(slash + 1)), 10);
        return Rational(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        std::string head(s.substr(0, dot));
        std::string tail(s.substr(dot + 1));
        if (tail.empty()) return Rational(Integer(head, 10));
        Integer scale = 1;
        for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
        bool neg = !head.empty() && head[0] == '-';
        if (head == "-" || head == "+") head += "0";
        Integer whole(head.empty() ? "0" : head, 10);
        Integer frac(tail, 10);
        Integer num = whole * scale + (neg ? -frac : frac);
        return Rational(num, scale);
    }
    return Rational(Integer(std::string(s), 10));
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

std::string decimal_of_scaled(const Integer& scaled_floor_next_digit, bool negative, int digits) {
    // scaled_floor_next_digit = floor(|value| * 10^(digits+1)); round half up.
    Integer rounded = (scaled_floor_next_digit + 5) / 10;
    Integer pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    Integer whole = rounded / pow10;
    std::string out;
    if (negative && rounded != 0) out += "-";
    out += whole.get_str();
    if (digits > 0) {
        Integer frac = rounded % pow10;
        std::string fs = frac.get_str();
        fs.insert(fs.begin(), static_cast<size_t>(digits) - fs.size(), '0');
        out += ".";
        out += fs;
    }
    return out;
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) throw std::invalid_argument("Rational::decimal: negative digit count");
    Integer pow10 = 1;
    for (int i = 0; i < digits + 1; ++i) pow10 *= 10;
    Integer scaled;
    Integer absnum = num_ >= 0 ? num_ : Integer(-num_);
    mpz_fdiv_q(scaled.get_mpz_t(), Integer(absnum * pow10).get_mpz_t(), den_.get_mpz_t());
    return decimal_of_scaled(scaled, sign() < 0, digits);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace pellwall
