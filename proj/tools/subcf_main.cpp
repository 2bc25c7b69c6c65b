// Command-line front end. Exit codes: 0 ok, 2 parse error, 3 fuel/table
// exhaustion, 4 domain error. All numeric output is exact except the
// certified `digits` command.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "subcf/convergents.hpp"
#include "subcf/converter.hpp"
#include "subcf/encoder.hpp"
#include "subcf/order.hpp"
#include "subcf/sources.hpp"
#include "subcf/text.hpp"

namespace {

using nlohmann::json;
using namespace subcf;

bool starts_with(const std::string& text, std::string_view prefix) {
    return text.size() >= prefix.size() && text.compare(0, prefix.size(), prefix) == 0;
}

Integer parse_sqrt_operand(const std::string& spec) {
    Rational d = parse_rational(spec);
    if (!d.is_integer()) throw ParseError("sqrt source: '" + spec + "' is not an integer");
    return d.numerator();
}

SimpleCf named_simple(const std::string& name, const SourceOptions& opts) {
    if (name == "pi") return pi_cf(opts);
    if (name == "phi") return golden_ratio_cf();
    if (name == "log2_3") return log2_3_cf(opts);
    if (starts_with(name, "sqrt:")) return sqrt_cf(parse_sqrt_operand(name.substr(5)));
    throw ParseError("unknown constant '" + name + "' (expected pi, phi, log2_3 or sqrt:d)");
}

// A source spec names an s-number: a rational literal 'p/q', an s-number
// literal '(...)', a simple-cf literal '[...]' (converted), or a named
// stream 'const:NAME' / 'sqrt:D'.
SNumber resolve_snumber(const std::string& spec, const SourceOptions& opts) {
    if (starts_with(spec, "(")) return parse_snumber(spec);
    if (starts_with(spec, "[")) return simple_to_subtraction(parse_simple_cf(spec));
    if (starts_with(spec, "const:")) return simple_to_subtraction(named_simple(spec.substr(6), opts));
    if (starts_with(spec, "sqrt:")) return simple_to_subtraction(named_simple(spec, opts));
    return encode_rational(parse_rational(spec));
}

// Inputs that are already simple continued fractions.
SimpleCf resolve_simple(const std::string& spec, const SourceOptions& opts) {
    if (starts_with(spec, "[")) return parse_simple_cf(spec);
    if (starts_with(spec, "const:")) return named_simple(spec.substr(6), opts);
    if (starts_with(spec, "sqrt:")) return named_simple(spec, opts);
    if (starts_with(spec, "("))
        throw DomainError("input '" + spec + "' is already a subtraction continued fraction");
    return simple_cf_of_rational(parse_rational(spec));
}

void emit_line(const std::string& text) { std::cout << text << "\n" << std::flush; }

const char* end_label(StreamEnd end) {
    switch (end) {
    case StreamEnd::Complete: return "complete";
    case StreamEnd::Truncated: return "truncated";
    case StreamEnd::Exhausted: return "exhausted";
    }
    return "?";
}

int run(int argc, char** argv) {
    CLI::App app{"exact arithmetic on subtraction continued fractions"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string data_dir;
    auto add_common = [&](CLI::App* cmd, bool with_data_dir = true) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json-lines"}))
            ->capture_default_str();
        if (with_data_dir)
            cmd->add_option("--data-dir", data_dir,
                            "directory with constant term tables (default: $SUBCF_DATA_DIR)");
    };

    std::string rational_arg;
    auto* enc = app.add_subcommand("encode", "rational -> s-number");
    enc->add_option("rational", rational_arg, "p/q or integer")->required();
    add_common(enc, false);

    std::string snumber_arg;
    auto* dec = app.add_subcommand("decode", "rational-tail s-number -> rational");
    dec->add_option("snumber", snumber_arg, "e.g. '(1, 3, &)'")->required();
    add_common(dec, false);

    std::string source_arg;
    std::uint64_t terms = 10;
    std::string eps_arg;
    auto* conv = app.add_subcommand("convergents", "table of n, R_n, L_n, A_n");
    conv->add_option("source", source_arg, "rational, literal, const:NAME or sqrt:D")->required();
    conv->add_option("--terms", terms, "number of records")->capture_default_str();
    conv->add_option("--eps", eps_arg, "stop at the first record with 1/A_n <= eps");
    add_common(conv);

    std::string to;
    std::string convert_input;
    std::uint64_t convert_terms = 24;
    std::uint64_t fuel = 256;
    auto* cv = app.add_subcommand("convert", "between simple and subtraction form");
    cv->add_option("--to", to, "target form")
        ->check(CLI::IsMember({"simple", "subtraction"}))
        ->required();
    cv->add_option("input", convert_input, "source spec")->required();
    cv->add_option("--terms", convert_terms, "max terms to stream")->capture_default_str();
    cv->add_option("--fuel", fuel, "max run of 2's scanned per block")->capture_default_str();
    add_common(cv);

    std::string left_arg, right_arg;
    std::uint64_t compare_fuel = 64;
    auto* cmp = app.add_subcommand("compare", "lexicographic order of two sources");
    cmp->add_option("a", left_arg)->required();
    cmp->add_option("b", right_arg)->required();
    cmp->add_option("--fuel", compare_fuel, "max quotients compared")->capture_default_str();
    add_common(cmp);

    std::string digits_source;
    std::uint64_t count = 0;
    auto* dig = app.add_subcommand("digits", "certified decimal digits");
    dig->add_option("source", digits_source)->required();
    dig->add_option("--count", count, "digits after the decimal point")->required();
    add_common(dig);

    std::string const_name;
    std::uint64_t const_terms = 10;
    auto* cst = app.add_subcommand("const", "simple-cf terms of a named constant");
    cst->add_option("name", const_name, "pi, phi, log2_3 or sqrt:d")->required();
    cst->add_option("--terms", const_terms)->capture_default_str();
    add_common(cst);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const bool json_lines = format == "json-lines";
    SourceOptions opts;
    if (!data_dir.empty()) opts.data_dir = data_dir;

    if (*enc) {
        SNumber s = encode_rational(parse_rational(rational_arg));
        std::string text = format_snumber(s, 0);
        emit_line(json_lines ? json{{"snumber", text}}.dump() : text);
        return 0;
    }

    if (*dec) {
        SNumber s = parse_snumber(snumber_arg);
        if (!s.is_rational_tail())
            throw DomainError("decode: input must end with '&' (rational tail)");
        Rational x = decode_rational(s);
        emit_line(json_lines ? json{{"value", x.str()}}.dump() : x.str());
        return 0;
    }

    if (*conv) {
        SNumber s = resolve_snumber(source_arg, opts);
        std::optional<Rational> eps;
        if (!eps_arg.empty()) {
            eps = parse_rational(eps_arg);
            if (!(*eps > Rational(0))) throw DomainError("convergents: eps must be positive");
        }
        ConvergentStream stream(s);
        std::uint64_t produced = 0;
        for (;;) {
            if (!eps && produced == terms) break;
            auto rec = stream.next();
            if (!rec)
                throw ExhaustedError("convergents: source ended after " +
                                     std::to_string(produced) + " records");
            if (json_lines)
                emit_line(json{{"n", rec->n},
                               {"right", rec->right.str()},
                               {"left", rec->left.str()},
                               {"accuracy", rec->accuracy.str()}}
                              .dump());
            else
                emit_line(std::to_string(rec->n) + " " + rec->right.str() + " " +
                          rec->left.str() + " " + rec->accuracy.str());
            ++produced;
            if (eps && rec->accuracy * eps->numerator() >= eps->denominator()) break;
        }
        return 0;
    }

    if (*cv) {
        TermPrefix pre;
        bool to_subtraction = to == "subtraction";
        if (to_subtraction)
            pre = take_snumber_prefix(simple_to_subtraction(resolve_simple(convert_input, opts)),
                                      convert_terms);
        else
            pre = take_simple_prefix(subtraction_to_simple(resolve_snumber(convert_input, opts), fuel),
                                     convert_terms);
        if (json_lines) {
            for (std::size_t i = 0; i < pre.terms.size(); ++i)
                emit_line(json{{"index", i}, {"term", pre.terms[i].str()}}.dump());
            emit_line(json{{"end", end_label(pre.end)}}.dump());
        } else {
            bool complete = pre.end == StreamEnd::Complete;
            emit_line(to_subtraction ? format_snumber_terms(pre.terms, complete)
                                     : format_simple_terms(pre.terms, complete));
        }
        if (pre.end == StreamEnd::Exhausted)
            throw ExhaustedError("convert: source ended after " +
                                 std::to_string(pre.terms.size()) + " terms");
        return 0;
    }

    if (*cmp) {
        Comparison rel = compare(resolve_snumber(left_arg, opts), resolve_snumber(right_arg, opts),
                                 compare_fuel);
        std::string text;
        switch (rel.order) {
        case Order::Less: text = "<"; break;
        case Order::Equal: text = "="; break;
        case Order::Greater: text = ">"; break;
        case Order::Indistinguishable: text = "?" + std::to_string(rel.inspected); break;
        }
        if (json_lines) {
            json obj{{"relation", rel.order == Order::Indistinguishable ? "?" : text}};
            if (rel.order == Order::Indistinguishable) obj["agreed"] = rel.inspected;
            emit_line(obj.dump());
        } else {
            emit_line(text);
        }
        return 0;
    }

    if (*dig) {
        std::string digits = decimal_digits(resolve_snumber(digits_source, opts), count);
        emit_line(json_lines ? json{{"digits", digits}}.dump() : digits);
        return 0;
    }

    if (*cst) {
        std::string name = starts_with(const_name, "const:") ? const_name.substr(6) : const_name;
        TermPrefix pre = take_simple_prefix(named_simple(name, opts), const_terms);
        if (json_lines) {
            for (std::size_t i = 0; i < pre.terms.size(); ++i)
                emit_line(json{{"index", i}, {"term", pre.terms[i].str()}}.dump());
            emit_line(json{{"end", end_label(pre.end)}}.dump());
        } else {
            emit_line(format_simple_terms(pre.terms, pre.end == StreamEnd::Complete));
        }
        if (pre.end == StreamEnd::Exhausted)
            throw ExhaustedError("const: table ended after " + std::to_string(pre.terms.size()) +
                                 " terms");
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const subcf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const subcf::ExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const subcf::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
