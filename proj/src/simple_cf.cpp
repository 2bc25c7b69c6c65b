#include "subcf/simple_cf.hpp"

#include <string>
#include <utility>

namespace subcf {

std::optional<Integer> SimpleTerms::next() {
    if (terms_) {
        if (index_ >= terms_->size()) return std::nullopt;
        return (*terms_)[index_++];
    }
    std::uint64_t pos = gen_->produced;
    auto t = gen_->next();
    if (!t) return std::nullopt;
    if (pos >= 1 && *t < 1)
        throw DomainError("simple cf: term " + t->str() + " below 1 at index " +
                          std::to_string(pos));
    index_ = pos + 1;
    return t;
}

SimpleCf SimpleCf::from_terms(std::vector<Integer> terms) {
    if (terms.empty()) throw DomainError("simple cf: empty term list");
    for (std::size_t i = 1; i < terms.size(); ++i)
        if (terms[i] < 1)
            throw DomainError("simple cf: term " + terms[i].str() + " below 1 at index " +
                              std::to_string(i));
    // [..., a, 1] and [..., a+1] name the same rational; store the latter.
    if (terms.size() > 1 && terms.back() == 1) {
        terms.pop_back();
        terms.back() += 1;
    }
    SimpleCf f;
    f.terms_ = std::make_shared<const std::vector<Integer>>(std::move(terms));
    return f;
}

SimpleCf SimpleCf::from_generator(IntPull gen) {
    SimpleCf f;
    f.gen_ = std::make_shared<detail::PullState>(detail::PullState{std::move(gen), std::nullopt});
    return f;
}

SimpleCf SimpleCf::from_generator(IntPull gen, std::uint64_t budget) {
    SimpleCf f;
    f.gen_ = std::make_shared<detail::PullState>(detail::PullState{std::move(gen), budget});
    return f;
}

SimpleCf SimpleCf::truncated(std::vector<Integer> terms) {
    auto state = std::make_shared<std::pair<std::vector<Integer>, std::size_t>>(
        std::move(terms), 0);
    return from_generator([state]() -> std::optional<Integer> {
        if (state->second >= state->first.size()) return std::nullopt;
        return state->first[state->second++];
    });
}

const std::vector<Integer>& SimpleCf::terms() const {
    if (!terms_) throw DomainError("simple cf: generator form has no finite term list");
    return *terms_;
}

SimpleTerms SimpleCf::stream() const { return SimpleTerms(terms_, gen_); }

bool SimpleCf::operator==(const SimpleCf& rhs) const {
    if (!terms_ || !rhs.terms_)
        throw DomainError("simple cf: equality needs finite forms on both sides");
    return *terms_ == *rhs.terms_;
}

}  // namespace subcf
