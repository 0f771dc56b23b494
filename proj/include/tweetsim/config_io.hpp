#pragma once

// Flat `key = value` config documents.
//
//   # comment
//   people = 1000
//   eight_mode = true
//   twitter_network = erdos_renyi      # or random_edges
//   event_location = 0,4
//
// Keys absent from a document keep their defaults. Unknown keys are errors.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "tweetsim/core.hpp"

namespace tweetsim {

/// One row of the parameter-name table: the published hyphenated name and
/// the config key it maps to.
struct ParameterName {
    std::string_view published;
    std::string_view key;
};

/// One entry per scenario parameter from the fixed and variable tables.
std::span<const ParameterName> parameter_names();

/// Every key the parser accepts, in serialization order.
std::span<const std::string_view> config_keys();

/// Lowercases and replaces '-' with '_' and drops a trailing '?'.
std::string normalize_key(std::string_view name);

SimulationConfig parse_config(std::string_view text);

/// Assigns one key; throws ConfigError on unknown key or unparsable value.
void set_config_value(SimulationConfig& cfg, std::string_view key, std::string_view value);

SimulationConfig load_config(const std::filesystem::path& path);

/// Writes every key, doubles at round-trip precision.
std::string format_config(const SimulationConfig& cfg);

}  // namespace tweetsim
