#include "subcf/converter.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "subcf/convergents.hpp"
#include "subcf/encoder.hpp"
#include "subcf/unimodular.hpp"

namespace subcf {

SimpleCf simple_cf_of_rational(const Rational& x) {
    // Euclidean algorithm; the natural expansion is already canonical
    // (last term >= 2 unless the value is an integer).
    std::vector<Integer> terms;
    Integer p = x.numerator();
    Integer q = x.denominator();
    for (;;) {
        Integer a = floor_div(p, q);
        terms.push_back(a);
        Integer r = p - a * q;  // in [0, q)
        if (r.is_zero()) break;
        p = std::move(q);
        q = std::move(r);
    }
    return SimpleCf::from_terms(std::move(terms));
}

Rational eval_simple_cf(const SimpleCf& input) {
    const auto& terms = input.terms();
    Unimodular g = Unimodular::identity();
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) g = g * add_step(terms[i]);
    // The running denominators are positive continuants and the last term
    // is >= 2 in canonical form, so the pole is unreachable.
    return g(Rational(terms.back())).value();
}

namespace {

// Streaming state of the pair rule. The emitted s-number is
//   a0 + 1, 2^(a1 - 1), a2 + 2, 2^(a3 - 1), a4 + 2, ...
// Runs are emitted lazily: a run counter instead of materialized 2's.
struct PairRuleState {
    SimpleTerms in;
    enum class Phase { Head, RunLength, Term } phase = Phase::Head;
    Integer run_remaining = 0;
    bool exhausted = false;

    std::optional<Integer> next() {
        if (exhausted) return std::nullopt;
        for (;;) {
            if (run_remaining.sign() > 0) {
                --run_remaining;
                return Integer(2);
            }
            auto a = in.next();
            if (!a) {
                exhausted = true;
                return std::nullopt;
            }
            switch (phase) {
            case Phase::Head:
                phase = Phase::RunLength;
                return *a + 1;
            case Phase::RunLength:
                run_remaining = *a - 1;
                phase = Phase::Term;
                continue;  // emit the run, or fall through to the term
            case Phase::Term:
                phase = Phase::RunLength;
                return *a + 2;
            }
        }
    }
};

}  // namespace

SNumber simple_to_subtraction(const SimpleCf& input) {
    if (input.is_finite()) {
        // The streaming rule assumes an endless term supply; a finite
        // fraction is a rational, handled exactly.
        return encode_rational(eval_simple_cf(input));
    }
    auto state = std::make_shared<PairRuleState>(PairRuleState{.in = input.stream()});
    return SNumber::from_generator([state]() { return state->next(); });
}

namespace {

// Block rule: with head h, a maximal run of k-1 twos and the following
// quotient q > 2, the simple continued fraction continues h - 1, k, and
// the conversion resumes with head q - 1.
struct BlockRuleState {
    SQuotients in;
    std::uint64_t fuel = 0;
    std::optional<Integer> head = std::nullopt;
    bool emit_head = true;
    bool exhausted = false;

    std::optional<Integer> next() {
        if (exhausted) return std::nullopt;
        if (emit_head) {
            if (!head) {
                auto h = in.next();
                if (!h) {
                    exhausted = true;
                    return std::nullopt;
                }
                head = std::move(h);
            }
            emit_head = false;
            return *head - 1;
        }
        // Scan the run of 2's, bounded by fuel.
        std::uint64_t twos = 0;
        for (;;) {
            auto q = in.next();
            if (!q) {
                exhausted = true;
                return std::nullopt;
            }
            if (*q == 2) {
                if (++twos > fuel)
                    throw ExhaustedError(
                        "subtraction to simple: run of 2's exceeds fuel " +
                        std::to_string(fuel) + "; cannot rule out a rational tail");
                continue;
            }
            head = *q - 1;
            emit_head = true;
            return Integer(twos + 1);
        }
    }
};

}  // namespace

SimpleCf subtraction_to_simple(const SNumber& input, std::uint64_t fuel) {
    if (fuel < 1) throw DomainError("subtraction to simple: fuel must be >= 1");
    if (input.is_rational_tail()) {
        // The tail of 2's is visible syntactically; go through the value.
        return simple_cf_of_rational(decode_rational(input));
    }
    auto state = std::make_shared<BlockRuleState>(
        BlockRuleState{.in = input.quotients(), .fuel = fuel});
    return SimpleCf::from_generator([state]() { return state->next(); });
}

}  // namespace subcf
