#pragma once

#include <filesystem>
#include <string_view>

#include "chainsim/world.hpp"

namespace chainsim {

// Parses a JSON configuration document into a WorldConfig. Every key is
// optional and falls back to the WorldConfig/InventionParams default.
// Unknown keys, wrong types, and out-of-range values raise
// std::invalid_argument naming the offending field.
//
// Keys: width, height, toroidal, invention_probability, rate_of_change,
// chaining_enabled, learning_enabled, max_chain_len, p_ext_max,
// iterations, seed.
WorldConfig parse_config(std::string_view json_text);

// Reads and parses a config file; missing/unreadable files raise io_error.
WorldConfig load_config_file(const std::filesystem::path& path);

// Range validation shared by the parser and programmatic callers; throws
// std::invalid_argument naming the first violated field.
void validate_config(const WorldConfig& config);

}  // namespace chainsim
