#pragma once

#include <memory>
#include <vector>

#include "subcf/errors.hpp"
#include "subcf/integer.hpp"
#include "subcf/stream.hpp"

namespace subcf {

class SimpleCf;

// Validating stream over simple-continued-fraction terms. A finite
// fraction's stream ends cleanly after its last term; a generator's
// nullopt means the source exhausted.
class SimpleTerms {
  public:
    // Throws DomainError when a produced term at index >= 1 is below 1.
    std::optional<Integer> next();

    std::uint64_t index() const { return index_; }

  private:
    friend class SimpleCf;
    SimpleTerms(std::shared_ptr<const std::vector<Integer>> terms,
                std::shared_ptr<detail::PullState> gen)
        : terms_(std::move(terms)), gen_(std::move(gen)) {}

    std::shared_ptr<const std::vector<Integer>> terms_;
    std::shared_ptr<detail::PullState> gen_;
    std::uint64_t index_ = 0;
};

// Classical simple continued fraction [a0; a1, a2, ...] with a_i >= 1 for
// i > 0. The finite form is canonical: when longer than one term the last
// term is >= 2 (a trailing 1 is folded into its predecessor), which makes
// the finite expansion of a rational unique.
class SimpleCf {
  public:
    static SimpleCf from_terms(std::vector<Integer> terms);
    static SimpleCf from_generator(IntPull gen);
    static SimpleCf from_generator(IntPull gen, std::uint64_t budget);

    // Generator form that yields exactly the listed terms and then
    // exhausts: a truncated observation, not a finite value.
    static SimpleCf truncated(std::vector<Integer> terms);

    bool is_finite() const { return terms_ != nullptr; }

    // Canonical term list; throws DomainError on generator form.
    const std::vector<Integer>& terms() const;

    SimpleTerms stream() const;

    // Canonical-term equality; throws DomainError on generator form.
    bool operator==(const SimpleCf& rhs) const;

  private:
    SimpleCf() = default;

    std::shared_ptr<const std::vector<Integer>> terms_;
    std::shared_ptr<detail::PullState> gen_;
};

}  // namespace subcf
