#pragma once

// Domain types and configuration shared by every tweetsim module.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tweetsim {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Invalid configuration value. `field()` names the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data that makes a statistic undefined (zero variance, empty segment...).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Geometry
// ---------------------------------------------------------------------------

struct GridCoord {
    int x = 0;
    int y = 0;

    friend bool operator==(const GridCoord&, const GridCoord&) = default;
};

double distance(GridCoord a, GridCoord b) noexcept;

enum class NetworkModel { ErdosRenyi, RandomEdges };

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

/// Parameters held constant across scenarios. Defaults reproduce the
/// reference setup: 1000 people on an Erdos-Renyi network with p = 0.45,
/// nine clusters holding 75% of users.
struct FixedParams {
    bool n_events = false;
    int event_sources = 1;
    bool eight_mode = true;
    NetworkModel twitter_network = NetworkModel::ErdosRenyi;
    std::int64_t num_links = 0;
    int people = 1000;
    double probability = 0.45;
    int step = 7;
    int num_clusters = 9;
    bool cluster = true;
    double percentage_clustering = 0.75;
    double tweet_threshold = 0.7;
    int user_interest = 5;
    int event_interest = 5;
    bool night_mode = true;

    double alpha = 1.0;
    double beta = 20.0;
    double z_variance = 0.2;
    int world_half_extent = 50;
    int initial_spread_radius = 3;
    double spread_rate = 1.0;
    int day_length = 24;
    int cluster_spread = 3;

    friend bool operator==(const FixedParams&, const FixedParams&) = default;
};

/// Per-scenario parameters. Defaults are the VIRG column.
struct VariableParams {
    double tweet_chance = 0.33;
    int event_duration = 31;
    double event_tweet_chance = 0.49;
    double night_tweet_chance = 0.17;
    int night_duration = 8;
    double ndist = 0.07;

    friend bool operator==(const VariableParams&, const VariableParams&) = default;
};

struct SimulationConfig {
    FixedParams fixed;
    VariableParams variable;
    std::uint64_t seed = 1;
    int total_ticks = 200;
    bool event_enabled = true;
    int event_tick = 100;
    GridCoord event_location{0, 4};
    GridCoord sensor_location{0, 0};
    double sensor_max_radius = 21.0;

    friend bool operator==(const SimulationConfig&, const SimulationConfig&) = default;
};

/// A SimulationConfig that passed validate_config. Only constructible
/// through validation, so holders may rely on every invariant.
class ValidatedConfig {
public:
    const SimulationConfig& get() const noexcept { return config_; }
    const SimulationConfig* operator->() const noexcept { return &config_; }
    const FixedParams& fixed() const noexcept { return config_.fixed; }
    const VariableParams& variable() const noexcept { return config_.variable; }

    /// Same config with a different seed. Seeds carry no invariants.
    ValidatedConfig with_seed(std::uint64_t seed) const {
        ValidatedConfig copy = *this;
        copy.config_.seed = seed;
        return copy;
    }

    friend bool operator==(const ValidatedConfig&, const ValidatedConfig&) = default;

private:
    explicit ValidatedConfig(SimulationConfig c) : config_(std::move(c)) {}
    friend ValidatedConfig validate_config(const SimulationConfig& raw);

    SimulationConfig config_;
};

/// Checks every parameter invariant; throws ConfigError naming the first
/// offending field.
ValidatedConfig validate_config(const SimulationConfig& raw);

bool in_world(GridCoord c, int half_extent) noexcept;

/// Night window: the last `night_duration` ticks of every day.
bool is_night_tick(int tick, int day_length, int night_duration) noexcept;

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

/// Tick-indexed count series, real or synthetic.
struct CountSeries {
    std::vector<std::int64_t> values;
    std::optional<int> event_tick;
    std::string label;

    std::size_t size() const noexcept { return values.size(); }
    std::int64_t max() const;
};

/// Throws NumericError when the series is empty or holds a negative value.
void check_series(const CountSeries& s);

}  // namespace tweetsim
