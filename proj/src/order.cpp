#include "subcf/order.hpp"

#include <algorithm>

#include "subcf/encoder.hpp"

namespace subcf {

Comparison compare(const SNumber& s, const SNumber& t, std::uint64_t fuel) {
    if (fuel < 1) throw DomainError("compare: fuel must be >= 1");

    if (s.is_rational_tail() && t.is_rational_tail()) {
        // Decidable: beyond both canonical prefixes everything is a 2, so
        // any difference shows up within the longer prefix.
        const auto& a = s.prefix();
        const auto& b = t.prefix();
        const Integer two(2);
        std::size_t limit = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < limit; ++i) {
            const Integer& x = i < a.size() ? a[i] : two;
            const Integer& y = i < b.size() ? b[i] : two;
            if (x != y) return {x < y ? Order::Less : Order::Greater, i + 1};
        }
        return {Order::Equal, limit};
    }

    auto qs = s.quotients();
    auto qt = t.quotients();
    for (std::uint64_t i = 0; i < fuel; ++i) {
        auto x = qs.next();
        auto y = qt.next();
        if (!x || !y) return {Order::Indistinguishable, i};
        if (*x != *y) return {*x < *y ? Order::Less : Order::Greater, i + 1};
    }
    return {Order::Indistinguishable, fuel};
}

Comparison compare_rational(const SNumber& s, const Rational& q, std::uint64_t fuel) {
    return compare(s, encode_rational(q), fuel);
}

}  // namespace subcf
