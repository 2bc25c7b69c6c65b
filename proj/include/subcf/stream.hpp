#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "subcf/integer.hpp"

namespace subcf {

// Pull-based producer of integer terms. Returning nullopt means the source
// is exhausted (pull budget spent or backing table ended); exhaustion is a
// status of the producer, never a value of the represented number.
using IntPull = std::function<std::optional<Integer>()>;

namespace detail {

// Shared state of a generator-form number. Single consumer: pulls mutate.
struct PullState {
    IntPull pull;
    std::optional<std::uint64_t> budget;  // remaining pulls, if bounded
    std::uint64_t produced = 0;           // absolute position in the sequence

    std::optional<Integer> next() {
        if (budget) {
            if (*budget == 0) return std::nullopt;
            --*budget;
        }
        auto term = pull();
        if (term) ++produced;
        return term;
    }
};

}  // namespace detail
}  // namespace subcf
