#include "subcf/convergents.hpp"

#include <string>
#include <utility>

#include "subcf/encoder.hpp"

namespace subcf {

using boost::multiprecision::abs;

std::optional<ConvergentRecord> ConvergentStream::next() {
    auto q = quotients_.next();
    if (!q) return std::nullopt;
    g_ = g_ * sub_step(*q);
    ConvergentRecord rec;
    rec.n = quotients_.index() - 1;
    rec.g = g_;
    // det g = +1 makes (a, c) and (a+b, c+d) coprime pairs, and c > 0,
    // c+d > 0 hold for every valid s-number, so no reduction is needed.
    rec.right = Rational::from_coprime(g_.a, g_.c);
    rec.left = Rational::from_coprime(g_.a + g_.b, g_.c + g_.d);
    rec.accuracy = (g_.c + g_.d) * g_.c;
    return rec;
}

Rational decode_rational(const SNumber& s) {
    return eval_finite_scf(s.prefix(), Rational(1));
}

BracketPair bracket(const SNumber& s, std::uint64_t n) {
    ConvergentStream stream(s);
    std::optional<ConvergentRecord> rec;
    for (std::uint64_t i = 0; i <= n; ++i) {
        rec = stream.next();
        if (!rec)
            throw ExhaustedError("bracket: source ended at index " + std::to_string(i) +
                                 " of " + std::to_string(n));
    }
    return {std::move(rec->left), std::move(rec->right)};
}

Rational approximate(const SNumber& s, const Rational& eps) {
    if (!(eps > Rational(0))) throw DomainError("approximate: eps must be positive");
    ConvergentStream stream(s);
    while (auto rec = stream.next()) {
        // 1/A <= eps  <=>  eps_den <= A * eps_num
        if (eps.denominator() <= rec->accuracy * eps.numerator()) return rec->right;
    }
    throw ExhaustedError("approximate: source ended before accuracy " + eps.str());
}

Integer recover_quotient(const Unimodular& g_prev, const Rational& right_n) {
    ExtendedRational pre = g_prev.inverse()(right_n);
    if (pre.is_infinity() || !pre.value().is_integer())
        throw DomainError("recover quotient: preimage of " + right_n.str() +
                          " is not an integer");
    return pre.value().numerator();
}

namespace {

// x with a*x == 1 (mod m), for m > 1 and gcd(a, m) = 1; result in [0, m).
Integer mod_inverse(Integer a, const Integer& m) {
    Integer old_r = std::move(a), r = m;
    Integer old_s = 1, s = 0;
    while (!r.is_zero()) {
        Integer quot = old_r / r;
        Integer next_r = old_r - quot * r;
        old_r = std::exchange(r, std::move(next_r));
        Integer next_s = old_s - quot * s;
        old_s = std::exchange(s, std::move(next_s));
    }
    Integer inv = old_s % m;
    if (inv.sign() < 0) inv += m;
    return inv;
}

}  // namespace

Unimodular matrix_from_right_convergent(const Rational& right_n) {
    const Integer& a = right_n.numerator();
    const Integer& c = right_n.denominator();  // positive and coprime with a
    Integer d;
    if (c == 1) {
        d = 0;  // the n = 0 matrix sub_step(a)
    } else {
        Integer residue = a % c;
        if (residue.sign() < 0) residue += c;
        d = mod_inverse(residue, c) - c;  // unique solution in (-c, 0)
    }
    Integer b = (a * d - 1) / c;  // exact: a*d == 1 (mod c)
    return {a, std::move(b), c, std::move(d)};
}

namespace {

// Renders floor(|x| * 10^count) as a decimal string with `count` digits
// after the point.
std::string render_scaled(const Integer& scaled_abs, std::uint64_t count, bool negative) {
    std::string digits = scaled_abs.str();
    if (digits.size() <= count) digits.insert(0, count + 1 - digits.size(), '0');
    digits.insert(digits.size() - count, ".");
    if (negative) digits.insert(0, "-");
    return digits;
}

}  // namespace

std::string decimal_digits(const SNumber& s, std::uint64_t count) {
    if (count < 1) throw DomainError("decimal digits: count must be >= 1");
    const Integer scale = pow10(count);

    if (s.is_rational_tail()) {
        // Exact long division.
        Rational x = decode_rational(s);
        bool negative = x.numerator().sign() < 0;
        Integer scaled = abs(x.numerator()) * scale / x.denominator();
        return render_scaled(scaled, count, negative);
    }

    // Refine [L, R) until both endpoints pin down floor(|x| * scale). The
    // value lives in a half-open interval, so an endpoint landing exactly
    // on a digit boundary still certifies.
    ConvergentStream stream(s);
    while (auto rec = stream.next()) {
        const Rational& left = rec->left;
        const Rational& right = rec->right;
        if (left.numerator().sign() >= 0) {
            // x >= 0: floor(x*scale) ranges over [floor(L*scale), hi] with
            // hi = R*scale - 1 when R*scale is integral (x < R strictly).
            Integer lo = floor_div(left.numerator() * scale, left.denominator());
            Integer right_scaled = right.numerator() * scale;
            Integer hi = right_scaled / right.denominator();
            if (right_scaled % right.denominator() == 0) --hi;
            if (lo == hi) return render_scaled(lo, count, false);
        } else if (right.numerator().sign() <= 0) {
            // x < 0: y = -x lies in (-R, -L], and floor(y*scale) ranges
            // over [floor(-R*scale), floor(-L*scale)].
            Integer lo = floor_div(-right.numerator() * scale, right.denominator());
            Integer hi = floor_div(-left.numerator() * scale, left.denominator());
            if (lo == hi) return render_scaled(hi, count, true);
        }
        // Sign or digit not yet certified: refine further.
    }
    throw ExhaustedError("decimal digits: source ended before certifying " +
                         std::to_string(count) + " digits");
}

}  // namespace subcf
