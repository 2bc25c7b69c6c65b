#pragma once

#include <stdexcept>

namespace subcf {

// Malformed textual input: rationals, s-numbers, simple continued
// fractions, source specs.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A pull-based source ran out of terms (pull budget, bundled table, or
// scan fuel) before the requested result could be produced.
struct ExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside an operation's domain: zero denominator, quotient below 2,
// perfect square passed to a square-root stream, ...
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace subcf
