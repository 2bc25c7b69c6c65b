#include "subcf/unimodular.hpp"

#include <ostream>

#include "subcf/errors.hpp"

namespace subcf {

Unimodular Unimodular::operator*(const Unimodular& rhs) const {
    return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
            c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
}

Unimodular Unimodular::inverse() const {
    Integer determinant = det();
    if (determinant == 1) return {d, -b, -c, a};
    if (determinant == -1) return {-d, b, c, -a};
    throw DomainError("unimodular: determinant is not +1 or -1");
}

ExtendedRational Unimodular::operator()(const ExtendedRational& x) const {
    if (x.is_infinity()) {
        if (c.is_zero()) return ExtendedRational::infinity();
        return ExtendedRational(Rational(a, c));
    }
    return (*this)(x.value());
}

ExtendedRational Unimodular::operator()(const Rational& x) const {
    // Projectively: (p : q) -> (a p + b q : c p + d q).
    const Integer& p = x.numerator();
    const Integer& q = x.denominator();
    Integer num = a * p + b * q;
    Integer den = c * p + d * q;
    if (den.is_zero()) return ExtendedRational::infinity();
    return ExtendedRational(Rational(std::move(num), std::move(den)));
}

std::ostream& operator<<(std::ostream& os, const Unimodular& g) {
    return os << "((" << g.a << ", " << g.b << "), (" << g.c << ", " << g.d << "))";
}

Unimodular sub_step(const Integer& m) { return {m, -1, 1, 0}; }

Unimodular add_step(const Integer& m) { return {m, 1, 1, 0}; }

Unimodular bridge() { return {1, 0, 1, -1}; }

Unimodular two_run(const Integer& k) { return {1 + k, -k, k, 1 - k}; }

}  // namespace subcf
