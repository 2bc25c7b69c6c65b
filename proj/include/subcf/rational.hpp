#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars over arbitrary-precision integers.
 *
 * Key invariants, maintained by every constructor:
 * - denominator > 0 (sign lives in the numerator)
 * - gcd(|numerator|, denominator) = 1, zero stored as 0/1
 *
 * Reduction happens at construction, never lazily, so equality is plain
 * field comparison and numerator/denominator extraction is canonical.
 */

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

#include "subcf/errors.hpp"
#include "subcf/integer.hpp"

namespace subcf {

class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}

    // Reduces; throws DomainError when den == 0.
    Rational(Integer num, Integer den);

    // Trusted constructor: den > 0 and gcd(|num|, den) == 1 already hold.
    // Used on hot paths where coprimality is structural (unimodular
    // matrix entries), skipping the gcd.
    static Rational from_coprime(Integer num, Integer den);

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }

    Integer floor() const { return floor_div(num_, den_); }

    // Throws DomainError on zero.
    Rational reciprocal() const;

    Rational operator-() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    // Throws DomainError when rhs is zero.
    Rational operator/(const Rational& rhs) const;

    bool operator==(const Rational& rhs) const = default;
    std::strong_ordering operator<=>(const Rational& rhs) const;

    // "p/q", or just "p" for integers.
    std::string str() const;

  private:
    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

// A rational or the single point at infinity. Infinity is a value, not an
// error: it arises as the image of a Möbius map's pole and as g(infinity).
class ExtendedRational {
  public:
    ExtendedRational(Rational value) : finite_(true), value_(std::move(value)) {}
    ExtendedRational(Integer value) : finite_(true), value_(std::move(value)) {}

    static ExtendedRational infinity();

    bool is_infinity() const { return !finite_; }

    // Throws DomainError at infinity.
    const Rational& value() const;

    bool operator==(const ExtendedRational& rhs) const;

  private:
    ExtendedRational() : finite_(false) {}

    bool finite_;
    Rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& x);

}  // namespace subcf
