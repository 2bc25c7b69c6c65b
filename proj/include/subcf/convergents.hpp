#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "subcf/snumber.hpp"
#include "subcf/unimodular.hpp"

namespace subcf {

// One row of the canonical Cauchy data of an s-number: the running matrix
// g_n = sub_step(s0) * ... * sub_step(s_n) and the values read off it.
//
// Structural facts (exercised by the property suites, relied on
// everywhere): det g = +1, c > 0, c + d > 0, d <= 0;
// right - left == 1/accuracy exactly; the rights strictly decrease, the
// lefts non-strictly increase, and the accuracies form a strictly
// increasing sequence of positive integers. Both convergent sequences
// converge to the represented real, rights from above.
struct ConvergentRecord {
    std::uint64_t n;
    Unimodular g;
    Rational right;    // a/c
    Rational left;     // (a+b)/(c+d); equals the value itself for
                       // rational-tail input once n passes the prefix
    Integer accuracy;  // (c+d)*c; bracket width is exactly 1/accuracy
};

// Incremental producer of convergent records, one matrix multiplication
// per step. Unbounded for rational-tail input; ends (nullopt) when a
// generator-form input exhausts. Single consumer.
class ConvergentStream {
  public:
    explicit ConvergentStream(const SNumber& s) : quotients_(s.quotients()) {}

    std::optional<ConvergentRecord> next();

  private:
    SQuotients quotients_;
    Unimodular g_ = Unimodular::identity();
};

// Exact value of a rational-tail s-number; inverse of encode_rational.
// Throws DomainError on generator form.
Rational decode_rational(const SNumber& s);

struct BracketPair {
    Rational left;
    Rational right;
};

// (L_n, R_n): left <= value < right, right - left == 1/A_n exactly.
// Throws ExhaustedError if the input cannot produce n+1 quotients.
BracketPair bracket(const SNumber& s, std::uint64_t n);

// R_n for the least n with 1/A_n <= eps, so |R_n - value| <= eps (strict
// except when the value is rational and the left convergent has already
// stabilized on it). Requires eps > 0; throws ExhaustedError if the input
// ends before that accuracy is reached.
Rational approximate(const SNumber& s, const Rational& eps);

// s_n from g_{n-1} and R_n: the Möbius preimage g_{n-1}^{-1}(R_n).
// Throws DomainError when the preimage is not an integer (the inputs do
// not belong to one s-number).
Integer recover_quotient(const Unimodular& g_prev, const Rational& right_n);

// Rebuilds the full matrix g_n from R_n alone: a and c are the signed
// numerator and positive denominator, d is the unique solution of
// a*d == 1 (mod c) in the window -c < d <= 0, and b = (a*d - 1)/c.
Unimodular matrix_from_right_convergent(const Rational& right_n);

// Truncated decimal expansion with `count` digits after the point. Every
// digit is certified by a bracket before it is emitted; rational-tail
// input switches to exact long division. Throws ExhaustedError when a
// generator input ends before certification.
std::string decimal_digits(const SNumber& s, std::uint64_t count);

}  // namespace subcf
