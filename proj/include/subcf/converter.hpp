#pragma once

#include "subcf/rational.hpp"
#include "subcf/simple_cf.hpp"
#include "subcf/snumber.hpp"

namespace subcf {

// Exact conversion, simple continued fraction -> s-number.
//
// Finite input is evaluated exactly and re-encoded, which settles the
// end-of-stream boundary case. Generator input streams by the pair rule:
// emit a0 + 1, then for each consumed pair (a_{2i-1}, a_{2i}) a run of
// a_{2i-1} - 1 twos followed by a_{2i} + 2. The rule is the closed form
// of rewriting the word add_step(a0) add_step(a1) ... into sub_step
// factors; the test suite checks it against an independent symbolic
// rewriter over the matrix identities.
SNumber simple_to_subtraction(const SimpleCf& input);

// Exact conversion, s-number -> simple continued fraction; inverse of the
// above on values.
//
// Rational-tail input is decoded and expanded with the Euclidean
// algorithm. Generator input streams block by block: with current head h
// followed by a maximal run of k-1 twos and then a quotient q > 2, emit
// h - 1 and k, then continue with head q - 1. `fuel` bounds one run scan:
// a run of 2's longer than fuel cannot be told apart from a rational tail,
// so the conversion reports ExhaustedError rather than guess.
SimpleCf subtraction_to_simple(const SNumber& input, std::uint64_t fuel);

// Canonical finite expansion of a rational, by the Euclidean algorithm.
SimpleCf simple_cf_of_rational(const Rational& x);

// Exact value of a finite simple continued fraction. Throws DomainError
// on generator form.
Rational eval_simple_cf(const SimpleCf& input);

}  // namespace subcf
