#include "subcf/encoder.hpp"

#include <string>
#include <utility>
#include <vector>

#include "subcf/unimodular.hpp"

namespace subcf {

Integer first_quotient(const Rational& x) { return x.floor() + 1; }

Rational remnant(const Rational& x, std::uint64_t n) {
    Rational r = x;
    for (std::uint64_t k = 0; k < n; ++k) {
        // first_quotient(r) - r lies in (0, 1], so the reciprocal exists
        // and is >= 1.
        r = (Rational(first_quotient(r)) - r).reciprocal();
    }
    return r;
}

SNumber encode_rational(const Rational& x) {
    // Runs the remnant recursion on raw numerator/denominator pairs. With
    // r = p/q reduced, the next remnant is q/(fq*q - p), which is already
    // reduced, so the loop needs no gcd.
    std::vector<Integer> prefix;
    Integer p = x.numerator();
    Integer q = x.denominator();
    for (;;) {
        Integer fq = floor_div(p, q) + 1;
        prefix.push_back(fq);
        Integer d = fq * q - p;  // (fq - r) * q, in (0, q]
        if (d == q) break;       // remnant reached 1: the tail of 2's starts
        p = std::move(q);
        q = std::move(d);
    }
    return SNumber::from_prefix(std::move(prefix));
}

Rational eval_finite_scf(std::span<const Integer> quotients, const Rational& tail) {
    for (std::size_t i = 1; i < quotients.size(); ++i)
        if (quotients[i] < 2)
            throw DomainError("finite scf: quotient below 2 at index " + std::to_string(i));
    if (quotients.size() >= 2 && tail < Rational(1))
        throw DomainError("finite scf: tail below 1");
    Unimodular g = Unimodular::identity();
    for (const Integer& q : quotients) g = g * sub_step(q);
    ExtendedRational y = g(tail);
    if (y.is_infinity()) throw DomainError("finite scf: tail hits the pole");
    return y.value();
}

SNumber sequence_remnant(const SNumber& s, std::uint64_t n) {
    if (n == 0) return s;
    if (s.is_rational_tail()) {
        const auto& pre = s.prefix();
        std::vector<Integer> rest;
        if (n < pre.size())
            rest.assign(pre.begin() + static_cast<std::ptrdiff_t>(n), pre.end());
        else
            rest.push_back(2);  // already inside the tail of 2's
        return SNumber::from_prefix(std::move(rest));
    }
    auto stream = s.quotients();
    for (std::uint64_t i = 0; i < n; ++i)
        if (!stream.next())
            throw ExhaustedError("sequence remnant: source ended at quotient " +
                                 std::to_string(i) + " of " + std::to_string(n));
    return SNumber::from_generator([stream]() mutable { return stream.next(); });
}

}  // namespace subcf
