#include "subcf/text.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>

#include "subcf/errors.hpp"

namespace subcf {

namespace {

// Materialized runs are capped so a typo like 2^99999999999 fails cleanly
// instead of exhausting memory.
constexpr std::uint64_t kMaxRunLength = 4'000'000;

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

bool is_integer_token(std::string_view token) {
    if (token.empty()) return false;
    std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
    if (start == token.size()) return false;
    for (std::size_t i = start; i < token.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view token, std::string_view what) {
    if (!is_integer_token(token))
        throw ParseError(std::string(what) + ": expected an integer, got '" +
                         std::string(token) + "'");
    return Integer(std::string(token));
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = text.find(sep, pos);
        if (next == std::string_view::npos) {
            parts.push_back(trim(text.substr(pos)));
            return parts;
        }
        parts.push_back(trim(text.substr(pos, next - pos)));
        pos = next + 1;
    }
}

std::uint64_t parse_run_length(std::string_view token) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value == 0)
        throw ParseError("s-number: bad run length '" + std::string(token) + "'");
    if (value > kMaxRunLength)
        throw ParseError("s-number: run length " + std::string(token) +
                         " too large to materialize");
    return value;
}

void append_terms(std::vector<Integer>& out, std::string_view item) {
    if (item.size() >= 3 && item[0] == '2' && item[1] == '^') {
        std::uint64_t run = parse_run_length(item.substr(2));
        out.insert(out.end(), run, Integer(2));
        return;
    }
    out.push_back(parse_integer(item, "s-number"));
}

}  // namespace

std::string format_rational(const Rational& x) { return x.str(); }

Rational parse_rational(std::string_view text) {
    auto body = trim(text);
    auto slash = body.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(body, "rational"));
    Integer num = parse_integer(trim(body.substr(0, slash)), "rational numerator");
    std::string_view den_part = trim(body.substr(slash + 1));
    Integer den = parse_integer(den_part, "rational denominator");
    if (den.is_zero()) throw ParseError("rational: zero denominator");
    return {std::move(num), std::move(den)};
}

TermPrefix take_snumber_prefix(const SNumber& s, std::uint64_t max_terms) {
    if (s.is_rational_tail()) return {s.prefix(), StreamEnd::Complete};
    TermPrefix out{{}, StreamEnd::Truncated};
    auto stream = s.quotients();
    for (std::uint64_t i = 0; i < max_terms; ++i) {
        auto q = stream.next();
        if (!q) {
            out.end = StreamEnd::Exhausted;
            return out;
        }
        out.terms.push_back(std::move(*q));
    }
    return out;
}

TermPrefix take_simple_prefix(const SimpleCf& f, std::uint64_t max_terms) {
    if (f.is_finite()) return {f.terms(), StreamEnd::Complete};
    TermPrefix out{{}, StreamEnd::Truncated};
    auto stream = f.stream();
    for (std::uint64_t i = 0; i < max_terms; ++i) {
        auto t = stream.next();
        if (!t) {
            out.end = StreamEnd::Exhausted;
            return out;
        }
        out.terms.push_back(std::move(*t));
    }
    return out;
}

std::string format_snumber_terms(std::span<const Integer> terms, bool rational_tail) {
    std::string out = "(";
    std::size_t i = 0;
    while (i < terms.size()) {
        if (i > 0) out += ", ";
        if (terms[i] == 2) {
            std::size_t j = i;
            while (j < terms.size() && terms[j] == 2) ++j;
            std::size_t run = j - i;
            if (run >= 3) {
                out += "2^" + std::to_string(run);
                i = j;
                continue;
            }
        }
        out += terms[i].str();
        ++i;
    }
    if (!terms.empty()) out += ", ";
    out += rational_tail ? "&" : "...";
    out += ")";
    return out;
}

std::string format_snumber(const SNumber& s, std::uint64_t max_terms) {
    TermPrefix pre = take_snumber_prefix(s, max_terms);
    return format_snumber_terms(pre.terms, pre.end == StreamEnd::Complete);
}

SNumber parse_snumber(std::string_view text) {
    auto body = trim(text);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
        throw ParseError("s-number: expected '(...)', got '" + std::string(body) + "'");
    body = trim(body.substr(1, body.size() - 2));
    if (body.empty()) throw ParseError("s-number: empty quotient list");

    bool rational_tail = false;
    bool truncated = false;
    std::vector<Integer> terms;
    auto items = split(body, ',');
    for (std::size_t i = 0; i < items.size(); ++i) {
        auto item = items[i];
        if (item == "&" || item == "...") {
            if (i + 1 != items.size())
                throw ParseError("s-number: '" + std::string(item) + "' must come last");
            (item == "&" ? rational_tail : truncated) = true;
            break;
        }
        append_terms(terms, item);
    }
    if (terms.empty()) throw ParseError("s-number: no quotients before the end marker");
    for (std::size_t i = 1; i < terms.size(); ++i)
        if (terms[i] < 2)
            throw ParseError("s-number: quotient " + terms[i].str() + " below 2 at index " +
                             std::to_string(i));
    if (rational_tail) return SNumber::from_prefix(std::move(terms));
    // Without '&' the listed quotients are a truncated observation.
    (void)truncated;
    return SNumber::truncated(std::move(terms));
}

std::string format_simple_terms(std::span<const Integer> terms, bool complete) {
    std::string out = "[";
    if (!terms.empty()) {
        out += terms[0].str();
        if (terms.size() > 1) {
            out += "; ";
            for (std::size_t i = 1; i < terms.size(); ++i) {
                if (i > 1) out += ", ";
                out += terms[i].str();
            }
        }
    }
    if (!complete) out += terms.size() > 1 ? ", ..." : "; ...";
    out += "]";
    return out;
}

std::string format_simple_cf(const SimpleCf& f, std::uint64_t max_terms) {
    TermPrefix pre = take_simple_prefix(f, max_terms);
    return format_simple_terms(pre.terms, pre.end == StreamEnd::Complete);
}

SimpleCf parse_simple_cf(std::string_view text) {
    auto body = trim(text);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ParseError("simple cf: expected '[...]', got '" + std::string(body) + "'");
    body = trim(body.substr(1, body.size() - 2));
    if (body.empty()) throw ParseError("simple cf: empty term list");

    std::vector<std::string_view> items;
    auto semi = body.find(';');
    if (semi == std::string_view::npos) {
        items = split(body, ',');
    } else {
        items.push_back(trim(body.substr(0, semi)));
        auto rest = trim(body.substr(semi + 1));
        if (rest.empty()) throw ParseError("simple cf: nothing after ';'");
        auto tail_items = split(rest, ',');
        items.insert(items.end(), tail_items.begin(), tail_items.end());
    }

    bool truncated = false;
    std::vector<Integer> terms;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i] == "...") {
            if (i + 1 != items.size()) throw ParseError("simple cf: '...' must come last");
            truncated = true;
            break;
        }
        terms.push_back(parse_integer(items[i], "simple cf"));
    }
    if (terms.empty()) throw ParseError("simple cf: no terms before '...'");
    for (std::size_t i = 1; i < terms.size(); ++i)
        if (terms[i] < 1)
            throw ParseError("simple cf: term " + terms[i].str() + " below 1 at index " +
                             std::to_string(i));
    if (!truncated) return SimpleCf::from_terms(std::move(terms));
    return SimpleCf::truncated(std::move(terms));
}

}  // namespace subcf
