#include "subcf/sources.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <string_view>
#include <utility>

#include "subcf/errors.hpp"

namespace subcf {

namespace {

SimpleCf table_stream(std::vector<Integer> terms) {
    auto state = std::make_shared<std::pair<std::vector<Integer>, std::size_t>>(
        std::move(terms), 0);
    return SimpleCf::from_generator([state]() -> std::optional<Integer> {
        if (state->second >= state->first.size()) return std::nullopt;
        return state->first[state->second++];
    });
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

// Built-in terms always win on their prefix; a bundled file may only
// extend them.
SimpleCf constant_cf(const ConstantTable& builtin, const std::string& filename,
                     const SourceOptions& opts) {
    std::vector<Integer> terms = builtin.quotients;
    auto dir = opts.data_dir ? opts.data_dir : env_data_dir();
    if (dir) {
        auto file = *dir / filename;
        if (std::filesystem::exists(file)) {
            ConstantTable full = load_table(builtin.name, file);
            if (full.quotients.size() < terms.size() ||
                !std::equal(terms.begin(), terms.end(), full.quotients.begin()))
                throw ParseError(file.string() + ": table disagrees with the built-in prefix of " +
                                 builtin.name);
            terms = std::move(full.quotients);
        }
    }
    return table_stream(std::move(terms));
}

}  // namespace

SimpleCf golden_ratio_cf() {
    return SimpleCf::from_generator([]() { return std::optional<Integer>(1); });
}

const ConstantTable& pi_builtin_table() {
    static const ConstantTable table{"pi", {3, 7, 15, 1, 292, 1, 1, 1, 2}, Provenance::Builtin};
    return table;
}

const ConstantTable& log2_3_builtin_table() {
    static const ConstantTable table{"log2_3", {1, 1, 1, 2, 2, 3, 1, 5, 2}, Provenance::Builtin};
    return table;
}

SimpleCf pi_cf(const SourceOptions& opts) {
    return constant_cf(pi_builtin_table(), "pi_cf.txt", opts);
}

SimpleCf log2_3_cf(const SourceOptions& opts) {
    return constant_cf(log2_3_builtin_table(), "log2_3_cf.txt", opts);
}

SimpleCf sqrt_cf(const Integer& d) {
    if (d < 2) throw DomainError("sqrt source: need d >= 2");
    Integer root = boost::multiprecision::sqrt(d);  // floor of sqrt(d)
    if (root * root == d)
        throw DomainError("sqrt source: " + d.str() + " is a perfect square");

    // Classical recurrence on (m, den): m' = den*a - m,
    // den' = (d - m'^2)/den (exact division), a' = floor((root + m')/den').
    // The expansion is purely periodic after the head and the period closes
    // at the first term equal to 2*root; recorded terms then replay forever.
    struct State {
        Integer d, root, m, den, a;
        std::vector<Integer> period = {};
        bool head_emitted = false;
        bool closed = false;
        std::size_t replay = 0;
    };
    auto st = std::make_shared<State>(State{.d = d, .root = root, .m = 0, .den = 1, .a = root});
    return SimpleCf::from_generator([st]() -> std::optional<Integer> {
        if (!st->head_emitted) {
            st->head_emitted = true;
            return st->root;
        }
        if (st->closed) {
            const Integer& term = st->period[st->replay];
            st->replay = (st->replay + 1) % st->period.size();
            return term;
        }
        st->m = st->den * st->a - st->m;
        st->den = (st->d - st->m * st->m) / st->den;
        st->a = floor_div(st->root + st->m, st->den);
        st->period.push_back(st->a);
        if (st->a == 2 * st->root) st->closed = true;
        return st->a;
    });
}

ConstantTable load_table(const std::string& name, const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open table file " + file.string());
    ConstantTable table{name, {}, Provenance::BundledData};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto body = trim(line);
        if (body.empty()) continue;
        bool ok = !body.empty();
        std::size_t start = (body[0] == '-' || body[0] == '+') ? 1 : 0;
        if (start == body.size()) ok = false;
        for (std::size_t i = start; ok && i < body.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(body[i]))) ok = false;
        if (!ok)
            throw ParseError(file.string() + ":" + std::to_string(lineno) +
                             ": expected one integer per line");
        Integer term{std::string(body)};
        if (!table.quotients.empty() && term < 1)
            throw ParseError(file.string() + ":" + std::to_string(lineno) +
                             ": term below 1 after the first");
        table.quotients.push_back(std::move(term));
    }
    return table;
}

std::optional<std::filesystem::path> env_data_dir() {
    const char* dir = std::getenv("SUBCF_DATA_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return std::filesystem::path(dir);
}

}  // namespace subcf
