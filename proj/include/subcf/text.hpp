#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subcf/rational.hpp"
#include "subcf/simple_cf.hpp"
#include "subcf/snumber.hpp"

// Textual grammar for the library's values. The exact syntax is pinned in
// docs/formats.md; parsers accept surrounding whitespace, printers emit
// the canonical spelling.
//
//   rational    -42/7      17
//   s-number    (1, 3, &)        (4, 2^6, 17, 294, 3, 4, ...)
//   simple CF   [3; 7, 15]       [1; 1, 1, ...]
//
// '&' marks the infinite tail of 2's (rational-tail form), '...' an
// unspecified continuation, and 2^k a run of k consecutive 2's.

namespace subcf {

std::string format_rational(const Rational& x);
Rational parse_rational(std::string_view text);

// Why a collected prefix ended.
enum class StreamEnd {
    Complete,   // rational tail reached / finite list complete
    Truncated,  // term cap hit, source could continue
    Exhausted,  // source ran out of terms
};

struct TermPrefix {
    std::vector<Integer> terms;
    StreamEnd end;
};

// Pulls up to max_terms quotients. Rational-tail input stops at the
// canonical prefix (Complete); generators stop at max_terms (Truncated)
// or at source end (Exhausted).
TermPrefix take_snumber_prefix(const SNumber& s, std::uint64_t max_terms);
TermPrefix take_simple_prefix(const SimpleCf& f, std::uint64_t max_terms);

// Runs of three or more 2's print as 2^k. rational_tail appends '&',
// otherwise '...'.
std::string format_snumber_terms(std::span<const Integer> terms, bool rational_tail);
std::string format_snumber(const SNumber& s, std::uint64_t max_terms);
SNumber parse_snumber(std::string_view text);

// complete=false appends ', ...'.
std::string format_simple_terms(std::span<const Integer> terms, bool complete);
std::string format_simple_cf(const SimpleCf& f, std::uint64_t max_terms);
SimpleCf parse_simple_cf(std::string_view text);

}  // namespace subcf
