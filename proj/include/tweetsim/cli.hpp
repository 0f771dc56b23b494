#pragma once

// Command-line pipeline: simulate, estimate, validate, sweep, baseline.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tweetsim::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kConfigError = 2,
    kIoError = 3,
    kNumericError = 4,
};

struct SimulateOptions {
    std::filesystem::path config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::filesystem::path> out;  // stdout when empty
    std::optional<std::filesystem::path> dump_agents;
    std::optional<std::filesystem::path> dump_edges;
};

struct EstimateOptions {
    std::filesystem::path series_path;
    std::optional<int> event_tick;
    std::optional<std::string> night_mask;  // "auto" or a tick,night file
    int night_duration = 8;
    int smoothing_window = 3;
    std::optional<std::string> column;
};

struct ValidateOptions {
    std::filesystem::path series_a;
    std::filesystem::path series_b;
    int max_lag = 20;
    std::optional<std::string> column;
    std::optional<std::filesystem::path> out;
};

struct SweepOptions {
    std::filesystem::path config_path;
    std::string seeds;  // "A..B", inclusive
    std::filesystem::path out_dir;
    unsigned threads = 0;  // 0 = hardware concurrency
};

struct BaselineOptions {
    std::filesystem::path reference;
    std::uint64_t seed = 1;
    std::optional<std::size_t> length;
    std::optional<std::string> column;
    std::optional<std::filesystem::path> out;
};

int cmd_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err);
int cmd_estimate(const EstimateOptions& o, std::ostream& out, std::ostream& err);
int cmd_validate(const ValidateOptions& o, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err);
int cmd_baseline(const BaselineOptions& o, std::ostream& out, std::ostream& err);

/// Parses "A..B" (inclusive). Throws std::invalid_argument on malformed or empty ranges.
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text);

/// Full command line, including the program name in args[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tweetsim::cli
