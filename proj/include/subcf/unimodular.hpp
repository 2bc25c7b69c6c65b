#pragma once

#include <iosfwd>

#include "subcf/integer.hpp"
#include "subcf/rational.hpp"

namespace subcf {

/// 2x2 integer matrix with determinant +1 or -1, acting on the extended
/// rationals by Möbius transformation x -> (a*x + b) / (c*x + d).
struct Unimodular {
    Integer a, b, c, d;

    static Unimodular identity() { return {1, 0, 0, 1}; }

    Integer det() const { return a * d - b * c; }

    Unimodular operator*(const Unimodular& rhs) const;

    // Integer inverse; throws DomainError unless det() is +1 or -1.
    Unimodular inverse() const;

    // Möbius action. The pole maps to infinity; infinity maps to a/c
    // (infinity again when c = 0).
    ExtendedRational operator()(const ExtendedRational& x) const;
    ExtendedRational operator()(const Rational& x) const;

    bool operator==(const Unimodular& rhs) const = default;
};

std::ostream& operator<<(std::ostream& os, const Unimodular& g);

// One subtraction-continued-fraction step, t -> m - 1/t. Determinant +1.
Unimodular sub_step(const Integer& m);

// One simple-continued-fraction step, t -> m + 1/t. Determinant -1.
Unimodular add_step(const Integer& m);

// Involution tying the two step families together:
//   add_step(x) * bridge() == sub_step(x + 1)
//   bridge() * add_step(x) == add_step(1) * add_step(x - 1)
//   bridge() * sub_step(x) == add_step(1) * sub_step(x - 1)
Unimodular bridge();

// k-th power of sub_step(2) in closed form; k may be negative.
// sub_step(2) is parabolic, so the entries are affine in k.
Unimodular two_run(const Integer& k);

}  // namespace subcf
