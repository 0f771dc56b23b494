#include "tweetsim/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace tweetsim {

double distance(GridCoord a, GridCoord b) noexcept {
    return std::hypot(static_cast<double>(a.x - b.x), static_cast<double>(a.y - b.y));
}

bool in_world(GridCoord c, int half_extent) noexcept {
    return std::abs(c.x) <= half_extent && std::abs(c.y) <= half_extent;
}

bool is_night_tick(int tick, int day_length, int night_duration) noexcept {
    if (night_duration <= 0 || day_length <= 0) return false;
    return tick % day_length >= day_length - night_duration;
}

std::int64_t CountSeries::max() const {
    if (values.empty()) throw NumericError("series '" + label + "' is empty");
    return *std::max_element(values.begin(), values.end());
}

void check_series(const CountSeries& s) {
    if (s.values.empty()) throw NumericError("series '" + s.label + "' is empty");
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (s.values[i] < 0)
            throw NumericError("series '" + s.label + "' has a negative count at tick " +
                               std::to_string(i));
    }
}

namespace {

void require(bool ok, const char* field, const std::string& what) {
    if (!ok) throw ConfigError(field, what);
}

void probability_field(double v, const char* field) {
    require(std::isfinite(v) && v >= 0.0 && v <= 1.0, field,
            "must be a probability in [0,1], got " + std::to_string(v));
}

void positive_real(double v, const char* field) {
    require(std::isfinite(v) && v > 0.0, field, "must be a positive real");
}

}  // namespace

ValidatedConfig validate_config(const SimulationConfig& raw) {
    const FixedParams& f = raw.fixed;
    const VariableParams& v = raw.variable;

    require(f.people >= 1, "people", "must be at least 1");
    require(f.event_sources >= 1, "event_sources", "must be at least 1");
    require(f.n_events || f.event_sources == 1, "event_sources",
            "must be 1 unless n_events is true");
    require(f.num_links >= 0, "num_links", "must be nonnegative");
    if (f.twitter_network == NetworkModel::RandomEdges) {
        const std::int64_t n = f.people;
        require(f.num_links <= n * (n - 1) / 2, "num_links",
                "exceeds the number of distinct pairs");
    }
    probability_field(f.probability, "probability");
    require(f.step >= 1, "step", "must be at least 1");
    require(f.num_clusters >= 1, "num_clusters", "must be at least 1");
    probability_field(f.percentage_clustering, "percentage_clustering");
    require(std::isfinite(f.tweet_threshold), "tweet_threshold", "must be finite");
    require(f.user_interest >= 0, "user_interest", "must be nonnegative");
    require(f.event_interest >= 0, "event_interest", "must be nonnegative");
    positive_real(f.alpha, "alpha");
    positive_real(f.beta, "beta");
    positive_real(f.z_variance, "z_variance");
    require(f.world_half_extent >= 1, "world_half_extent", "must be at least 1");
    require(f.initial_spread_radius >= 0, "initial_spread_radius", "must be nonnegative");
    positive_real(f.spread_rate, "spread_rate");
    require(f.day_length >= 1, "day_length", "must be at least 1");
    require(f.cluster_spread >= 0, "cluster_spread", "must be nonnegative");

    probability_field(v.tweet_chance, "tweet_chance");
    require(v.event_duration >= 1, "event_duration", "must be at least 1");
    probability_field(v.event_tweet_chance, "event_tweet_chance");
    probability_field(v.night_tweet_chance, "night_tweet_chance");
    require(v.night_duration >= 0, "night_duration", "must be nonnegative");
    require(v.night_duration <= f.day_length, "night_duration", "must not exceed day_length");
    positive_real(v.ndist, "ndist");

    require(raw.total_ticks >= 1, "total_ticks", "must be at least 1");
    require(raw.event_tick >= 0, "event_tick", "must be nonnegative");
    require(raw.event_tick < raw.total_ticks, "event_tick", "must be less than total_ticks");
    require(in_world(raw.event_location, f.world_half_extent), "event_location",
            "outside the world");
    require(in_world(raw.sensor_location, f.world_half_extent), "sensor_location",
            "outside the world");
    positive_real(raw.sensor_max_radius, "sensor_max_radius");

    return ValidatedConfig(raw);
}

}  // namespace tweetsim
