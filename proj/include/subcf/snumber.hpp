#pragma once

#include <memory>
#include <vector>

#include "subcf/errors.hpp"
#include "subcf/integer.hpp"
#include "subcf/stream.hpp"

namespace subcf {

class SNumber;

// Validating stream over the quotients of an s-number. For rational-tail
// numbers the stream is unbounded (the implicit tail of 2's is expanded);
// for generator-form numbers pulls pass through to the shared producer, so
// all streams over one generator SNumber consume it jointly.
class SQuotients {
  public:
    // nullopt only for generator form, on exhaustion. Throws DomainError
    // when a produced quotient at index >= 1 is below 2.
    std::optional<Integer> next();

    // Number of quotients produced so far (= index of the next one).
    std::uint64_t index() const { return index_; }

  private:
    friend class SNumber;
    SQuotients(std::shared_ptr<const std::vector<Integer>> prefix,
               std::shared_ptr<detail::PullState> gen)
        : prefix_(std::move(prefix)), gen_(std::move(gen)) {}

    std::shared_ptr<const std::vector<Integer>> prefix_;
    std::shared_ptr<detail::PullState> gen_;
    std::uint64_t index_ = 0;
};

/**
 * An s-number: an infinite integer sequence (s0, s1, ...) with s_n >= 2
 * for every n >= 1. Exactly the rationals have an eventually-all-2's
 * sequence, which gives the two storage forms:
 *
 * - rational tail: a finite canonical prefix (s0, ..., sk) standing for
 *   (s0, ..., sk, 2, 2, 2, ...). Canonical means k == 0 or s_k != 2, so
 *   value equality is prefix equality. Immutable, freely shareable.
 * - generator: a pull-based producer with an optional pull budget.
 *   Single consumer; every produced quotient is validated.
 */
class SNumber {
  public:
    // Canonicalizes (strips trailing 2's down to length one) and validates.
    static SNumber from_prefix(std::vector<Integer> prefix);

    static SNumber from_generator(IntPull gen);
    static SNumber from_generator(IntPull gen, std::uint64_t budget);

    // Generator form that yields exactly the listed quotients and then
    // exhausts. This is a truncated observation of some s-number, not the
    // rational-tail value with that prefix.
    static SNumber truncated(std::vector<Integer> quotients);

    bool is_rational_tail() const { return prefix_ != nullptr; }

    // Canonical prefix; throws DomainError on generator form.
    const std::vector<Integer>& prefix() const;

    SQuotients quotients() const;

    // Syntactic equality of canonical prefixes. Throws DomainError if
    // either side is generator form; use the order module's fuel-bounded
    // compare for those.
    bool operator==(const SNumber& rhs) const;

  private:
    SNumber() = default;

    std::shared_ptr<const std::vector<Integer>> prefix_;
    std::shared_ptr<detail::PullState> gen_;
};

}  // namespace subcf
