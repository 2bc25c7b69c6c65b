#pragma once

#include <span>

#include "subcf/rational.hpp"
#include "subcf/snumber.hpp"

namespace subcf {

// The unique integer q with 1 >= q - x > 0, i.e. floor(x) + 1.
Integer first_quotient(const Rational& x);

// n-th remnant: r_0 = x, r_{k+1} = 1 / (first_quotient(r_k) - r_k).
// Satisfies r_n >= 1 for n >= 1, and r_n == 1 exactly once x's expansion
// has settled into the tail of 2's.
Rational remnant(const Rational& x, std::uint64_t n);

// Subtraction-continued-fraction expansion of an exact rational: emit
// first_quotient, pass to the next remnant, stop when the remnant is 1.
// Always terminates (remnant denominators strictly decrease) and always
// yields a rational-tail s-number whose prefix is canonical.
SNumber encode_rational(const Rational& x);

// <q0, q1, ..., q_{m-1}, tail>: exact value of the finite subtraction
// continued fraction q0 - 1/(q1 - 1/(... - 1/tail)). Requires q_i >= 2
// for i >= 1 and tail >= 1 when there are quotients past position 0;
// under those bounds no division by zero can occur.
Rational eval_finite_scf(std::span<const Integer> quotients, const Rational& tail);

// Drops the first n quotients. Intertwines with remnant on rationals:
// sequence_remnant(encode_rational(x), n) == encode_rational(remnant(x, n)).
// Generator form: consumes n pulls from the shared source and throws
// ExhaustedError if it ends first.
SNumber sequence_remnant(const SNumber& s, std::uint64_t n);

}  // namespace subcf
