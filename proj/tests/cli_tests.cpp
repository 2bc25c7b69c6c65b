#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "subcf/rational.hpp"
#include "subcf/text.hpp"

using nlohmann::json;
using subcf::Integer;
using subcf::Rational;

namespace {

struct CmdResult {
    int status;
    std::string out;
};

// Runs the CLI with a scrubbed SUBCF_DATA_DIR unless the caller sets one.
CmdResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = "env -u SUBCF_DATA_DIR " + env + " '" SUBCF_CLI_PATH "' " + args +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("encode and decode round trip through the text grammar") {
    auto enc = run_cli("encode 1/2");
    CHECK(enc.status == 0);
    CHECK(enc.out == "(1, 3, &)\n");

    auto dec = run_cli("decode '(8, &)'");
    CHECK(dec.status == 0);
    CHECK(dec.out == "7\n");

    auto conv = run_cli("convert --to subtraction 22/7");
    CHECK(conv.status == 0);
    CHECK(conv.out == "(4, 2^5, 3, &)\n");

    std::mt19937_64 rng(0xc11f00d);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    for (int i = 0; i < 25; ++i) {
        Rational x(Integer(num(rng)), Integer(den(rng)));
        // '--' keeps negative numerators from looking like flags
        auto encoded = run_cli("encode -- '" + x.str() + "'");
        REQUIRE(encoded.status == 0);
        std::string literal = encoded.out.substr(0, encoded.out.size() - 1);
        auto decoded = run_cli("decode \"" + literal + "\"");
        REQUIRE(decoded.status == 0);
        CHECK(decoded.out == x.str() + "\n");
    }
}

TEST_CASE("convergent tables") {
    auto table = run_cli("convergents const:pi --terms 8");
    CHECK(table.status == 0);
    auto rows = lines_of(table.out);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0] == "0 4 3 1");
    CHECK(rows[6] == "6 22/7 3 7");
    CHECK(rows[7] == "7 355/113 333/106 11978");

    // json-lines carries the same fields value for value
    auto jl = run_cli("convergents const:pi --terms 8 --format json-lines");
    CHECK(jl.status == 0);
    auto jrows = lines_of(jl.out);
    REQUIRE(jrows.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
        json obj = json::parse(jrows[i]);
        std::istringstream text(rows[i]);
        std::string n, right, left, accuracy;
        text >> n >> right >> left >> accuracy;
        CHECK(std::to_string(obj["n"].get<std::uint64_t>()) == n);
        CHECK(obj["right"].get<std::string>() == right);
        CHECK(obj["left"].get<std::string>() == left);
        CHECK(obj["accuracy"].get<std::string>() == accuracy);
    }

    // --eps stops at the first sufficiently accurate record
    auto eps = run_cli("convergents 1/2 --eps 1/10");
    CHECK(eps.status == 0);
    auto eps_rows = lines_of(eps.out);
    REQUIRE(!eps_rows.empty());
    CHECK(eps_rows.back() == "2 3/5 1/2 10");
}

TEST_CASE("conversion streaming") {
    auto to_sub = run_cli("convert --to subtraction '[3; 7, 15, 1, 292, 1, 1, 1, 2, ...]' "
                          "--terms 11");
    CHECK(to_sub.status == 0);
    CHECK(to_sub.out == "(4, 2^6, 17, 294, 3, 4, ...)\n");

    auto to_simple = run_cli("convert --to simple '(4, 2^6, 17, 294, 3, 4, ...)' --terms 9");
    CHECK(to_simple.status == 0);
    CHECK(to_simple.out == "[3; 7, 15, 1, 292, 1, 1, 1, 2, ...]\n");

    auto finite = run_cli("convert --to simple '(4, 2^5, 3, &)'");
    CHECK(finite.status == 0);
    CHECK(finite.out == "[3; 7]\n");

    // asking for more terms than the window supports: partial output, exit 3
    auto starved = run_cli("convert --to subtraction '[3; 7, 15, 1, 292, 1, 1, 1, 2, ...]' "
                           "--terms 12");
    CHECK(starved.status == 3);
    CHECK(starved.out == "(4, 2^6, 17, 294, 3, 4, ...)\n");
}

TEST_CASE("comparison") {
    CHECK(run_cli("compare const:pi 355/113").out == "<\n");
    CHECK(run_cli("compare 1/2 1/2").out == "=\n");
    CHECK(run_cli("compare const:pi 3").out == ">\n");
    auto tie = run_cli("compare const:phi const:phi --fuel 10");
    CHECK(tie.status == 0);
    CHECK(tie.out == "?10\n");

    auto jl = run_cli("compare const:phi 5/3 --format json-lines");
    CHECK(jl.status == 0);
    CHECK(json::parse(jl.out)["relation"] == "<");
}

TEST_CASE("json-lines mirrors text output") {
    CHECK(json::parse(run_cli("encode 1/2 --format json-lines").out)["snumber"] ==
          "(1, 3, &)");
    CHECK(json::parse(run_cli("decode '(1, 3, &)' --format json-lines").out)["value"] == "1/2");
    CHECK(json::parse(run_cli("digits 1/2 --count 3 --format json-lines").out)["digits"] ==
          "0.500");

    auto conv = run_cli("convert --to subtraction 22/7 --format json-lines");
    auto rows = lines_of(conv.out);
    REQUIRE(rows.size() == 8);  // 7 quotients + status
    CHECK(json::parse(rows[0]) == json({{"index", 0}, {"term", "4"}}));
    CHECK(json::parse(rows[6]) == json({{"index", 6}, {"term", "3"}}));
    CHECK(json::parse(rows[7]) == json({{"end", "complete"}}));
}

TEST_CASE("certified digits") {
    auto half = run_cli("digits 1/2 --count 3");
    CHECK(half.status == 0);
    CHECK(half.out == "0.500\n");

    auto phi = run_cli("digits const:phi --count 10");
    CHECK(phi.status == 0);
    CHECK(phi.out == "1.6180339887\n");

    // built-in pi table supports 6 digits but not 15
    CHECK(run_cli("digits const:pi --count 6").out == "3.141592\n");
    CHECK(run_cli("digits const:pi --count 15").status == 3);

    // the bundled table goes further, via flag or environment
    auto deep = run_cli("digits const:pi --count 15 --data-dir '" SUBCF_TEST_DATA_DIR "'");
    CHECK(deep.status == 0);
    CHECK(deep.out == "3.141592653589793\n");
    auto via_env = run_cli("digits const:pi --count 15",
                           "SUBCF_DATA_DIR='" SUBCF_TEST_DATA_DIR "'");
    CHECK(via_env.status == 0);
    CHECK(via_env.out == "3.141592653589793\n");

    auto root2 = run_cli("digits sqrt:2 --count 8");
    CHECK(root2.status == 0);
    CHECK(root2.out == "1.41421356\n");
}

TEST_CASE("named constants") {
    auto pi9 = run_cli("const pi --terms 9");
    CHECK(pi9.status == 0);
    CHECK(pi9.out == "[3; 7, 15, 1, 292, 1, 1, 1, 2, ...]\n");

    // the table is exhausted when more terms are requested
    CHECK(run_cli("const pi --terms 10").status == 3);
    CHECK(run_cli("const phi --terms 4").out == "[1; 1, 1, 1, ...]\n");
    CHECK(run_cli("const sqrt:7 --terms 5").out == "[2; 1, 1, 1, 4, ...]\n");
}

TEST_CASE("error reporting is distinct per failure class") {
    CHECK(run_cli("encode not-a-number").status == 2);
    CHECK(run_cli("decode '(3, 1, &)'").status == 2);
    CHECK(run_cli("decode '(4, 2^6, ...)'").status == 4);  // not a rational tail
    CHECK(run_cli("digits sqrt:4 --count 3").status == 4);
    CHECK(run_cli("digits sqrt:9/2 --count 3").status == 2);
    CHECK(run_cli("compare '(2, 3, ...)' '(2, 3, ...)' --fuel 5").out == "?2\n");
    CHECK(run_cli("nonsense-subcommand").status == 2);
    CHECK(run_cli("convert --to simple 'const:phi' --terms 4 --fuel 2").status == 0);

    // run scan fuel exhaustion: all-2 window looks like a rational tail
    CHECK(run_cli("convert --to simple '(5, 2^30, ...)' --fuel 10 --terms 5").status == 3);
}
