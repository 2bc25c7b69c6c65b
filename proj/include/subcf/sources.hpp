#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "subcf/simple_cf.hpp"

namespace subcf {

enum class Provenance { Builtin, BundledData };

// A named, finite table of simple-continued-fraction partial quotients.
struct ConstantTable {
    std::string name;
    std::vector<Integer> quotients;
    Provenance provenance;
};

// Where to look for bundled term tables. Resolution order: explicit
// data_dir, then the SUBCF_DATA_DIR environment variable, then built-in
// terms only.
struct SourceOptions {
    std::optional<std::filesystem::path> data_dir;
};

// Golden ratio: the all-ones stream. Never exhausts.
SimpleCf golden_ratio_cf();

// pi and log2(3): a short built-in table extended by the bundled data
// files pi_cf.txt / log2_3_cf.txt when a data directory is available (the
// file must agree with the built-in prefix). The stream ends when the
// table runs out.
SimpleCf pi_cf(const SourceOptions& opts = {});
SimpleCf log2_3_cf(const SourceOptions& opts = {});

// The built-in tables behind pi_cf and log2_3_cf.
const ConstantTable& pi_builtin_table();
const ConstantTable& log2_3_builtin_table();

// Eventually-periodic expansion of sqrt(d) via the standard integer
// recurrence; the period is detected once and cycled forever. Requires
// d >= 2 and not a perfect square (DomainError otherwise).
SimpleCf sqrt_cf(const Integer& d);

// Reads a one-term-per-line table ('#' starts a comment). ParseError on
// malformed content.
ConstantTable load_table(const std::string& name, const std::filesystem::path& file);

std::optional<std::filesystem::path> env_data_dir();

}  // namespace subcf
