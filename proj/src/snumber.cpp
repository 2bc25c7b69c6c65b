#include "subcf/snumber.hpp"

#include <string>
#include <utility>

namespace subcf {

std::optional<Integer> SQuotients::next() {
    if (prefix_) {
        Integer q = index_ < prefix_->size() ? (*prefix_)[index_] : Integer(2);
        ++index_;
        return q;
    }
    std::uint64_t pos = gen_->produced;
    auto q = gen_->next();
    if (!q) return std::nullopt;
    if (pos >= 1 && *q < 2)
        throw DomainError("s-number: quotient " + q->str() + " below 2 at index " +
                          std::to_string(pos));
    index_ = pos + 1;
    return q;
}

SNumber SNumber::from_prefix(std::vector<Integer> prefix) {
    if (prefix.empty()) throw DomainError("s-number: empty prefix");
    for (std::size_t i = 1; i < prefix.size(); ++i)
        if (prefix[i] < 2)
            throw DomainError("s-number: quotient " + prefix[i].str() + " below 2 at index " +
                              std::to_string(i));
    // Canonical form: trailing 2's belong to the implicit tail.
    while (prefix.size() > 1 && prefix.back() == 2) prefix.pop_back();
    SNumber s;
    s.prefix_ = std::make_shared<const std::vector<Integer>>(std::move(prefix));
    return s;
}

SNumber SNumber::from_generator(IntPull gen) {
    SNumber s;
    s.gen_ = std::make_shared<detail::PullState>(detail::PullState{std::move(gen), std::nullopt});
    return s;
}

SNumber SNumber::from_generator(IntPull gen, std::uint64_t budget) {
    SNumber s;
    s.gen_ = std::make_shared<detail::PullState>(detail::PullState{std::move(gen), budget});
    return s;
}

SNumber SNumber::truncated(std::vector<Integer> quotients) {
    auto state = std::make_shared<std::pair<std::vector<Integer>, std::size_t>>(
        std::move(quotients), 0);
    return from_generator([state]() -> std::optional<Integer> {
        if (state->second >= state->first.size()) return std::nullopt;
        return state->first[state->second++];
    });
}

const std::vector<Integer>& SNumber::prefix() const {
    if (!prefix_) throw DomainError("s-number: generator form has no finite prefix");
    return *prefix_;
}

SQuotients SNumber::quotients() const { return SQuotients(prefix_, gen_); }

bool SNumber::operator==(const SNumber& rhs) const {
    if (!prefix_ || !rhs.prefix_)
        throw DomainError("s-number: equality needs rational-tail forms on both sides");
    return *prefix_ == *rhs.prefix_;
}

}  // namespace subcf
