#pragma once

#include <cstdint>

#include "subcf/rational.hpp"
#include "subcf/snumber.hpp"

namespace subcf {

enum class Order {
    Less,
    Equal,
    Greater,
    // Agreement up to the inspected window; no verdict. Only possible when
    // a generator-form input is involved.
    Indistinguishable,
};

struct Comparison {
    Order order;
    // Quotients inspected in lockstep. For Indistinguishable this is the
    // agreement length n reported to the caller.
    std::uint64_t inspected;
};

// Lexicographic comparison of s-numbers, which coincides with the order of
// the represented reals. Two rational-tail inputs are decided exactly and
// ignore fuel (equality is syntactic on canonical prefixes). With a
// generator on either side, at most `fuel` quotients are compared and the
// result can be Less, Greater or Indistinguishable, never Equal.
Comparison compare(const SNumber& s, const SNumber& t, std::uint64_t fuel);

// compare(s, encode_rational(q), fuel).
Comparison compare_rational(const SNumber& s, const Rational& q, std::uint64_t fuel);

}  // namespace subcf
