#include "subcf/rational.hpp"

#include <cassert>
#include <ostream>

namespace subcf {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational: zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Integer g = gcd(abs(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::from_coprime(Integer num, Integer den) {
    assert(den.sign() > 0);
    assert(gcd(abs(num), den) == 1);
    Rational r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DomainError("rational: reciprocal of zero");
    if (num_.sign() < 0) return from_coprime(-den_, -num_);
    return from_coprime(den_, num_);
}

Rational Rational::operator-() const { return from_coprime(-num_, den_); }

Rational Rational::operator+(const Rational& rhs) const {
    return {num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_};
}

Rational Rational::operator-(const Rational& rhs) const {
    return {num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_};
}

Rational Rational::operator*(const Rational& rhs) const {
    return {num_ * rhs.num_, den_ * rhs.den_};
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.is_zero()) throw DomainError("rational: division by zero");
    return {num_ * rhs.den_, den_ * rhs.num_};
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
    Integer lhs_cross = num_ * rhs.den_;
    Integer rhs_cross = rhs.num_ * den_;
    if (lhs_cross < rhs_cross) return std::strong_ordering::less;
    if (lhs_cross > rhs_cross) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

ExtendedRational ExtendedRational::infinity() { return ExtendedRational(); }

const Rational& ExtendedRational::value() const {
    if (!finite_) throw DomainError("extended rational: value at infinity");
    return value_;
}

bool ExtendedRational::operator==(const ExtendedRational& rhs) const {
    if (finite_ != rhs.finite_) return false;
    return !finite_ || value_ == rhs.value_;
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& x) {
    if (x.is_infinity()) return os << "inf";
    return os << x.value();
}

}  // namespace subcf
