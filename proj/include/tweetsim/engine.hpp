#pragma once

// Simulation phase: per-tick z-draws, event influence spreading, the tweet
// and retweet gates, and the sensor's per-ring counting.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tweetsim/core.hpp"
#include "tweetsim/random.hpp"
#include "tweetsim/setup.hpp"

namespace tweetsim {

enum class TweetKind : std::uint8_t { Standard, EventRelated, Night, StandardRetweet, EventRetweet };

inline constexpr std::size_t kTweetKinds = 5;

std::string_view to_string(TweetKind kind) noexcept;

struct TweetEvent {
    int tick = 0;
    AgentId agent_id = 0;
    TweetKind kind = TweetKind::Standard;
    GridCoord position;
};

struct TickRecord {
    int tick = 0;
    std::array<std::int64_t, kTweetKinds> counts{};
    std::int64_t total = 0;
    std::vector<std::int64_t> ring_counts;

    std::int64_t count(TweetKind k) const noexcept { return counts[static_cast<std::size_t>(k)]; }

    friend bool operator==(const TickRecord&, const TickRecord&) = default;
};

// ---------------------------------------------------------------------------
// Gates
// ---------------------------------------------------------------------------

double draw_z(Rng& rng, double tweet_threshold, double z_variance);

struct EventTweetParams {
    double event_tweet_chance = 0.49;
    double ndist = 0.07;
    double alpha = 1.0;
    double beta = 20.0;

    static EventTweetParams from(const ValidatedConfig& c) {
        return {c.variable().event_tweet_chance, c.variable().ndist, c.fixed().alpha,
                c.fixed().beta};
    }
};

/// q = event_tweet_chance * max(1, t - t_event)^(-ndist/alpha) * max(1, d)^(-ndist/beta).
double event_tweet_probability(int t, int t_event, double d_event, const EventTweetParams& p);

/// Everything decide_action needs to know about the agent's situation this tick.
struct GateState {
    bool night = false;         // inside the night window with night_mode on
    bool event_phase = false;   // event active, or ended less than event_interest ticks ago
    bool event_active = false;  // t_event <= t < t_event + event_duration
    double q = 0.0;             // event tweet probability; meaningful only in event_phase
    bool influenced = false;    // agent's patch carries event influence
};

struct GateChances {
    double tweet_chance = 0.33;
    double night_tweet_chance = 0.17;

    static GateChances from(const VariableParams& v) { return {v.tweet_chance, v.night_tweet_chance}; }
};

/// One action at most per agent per tick. Neighbour predicates are only
/// evaluated when a gate needs them.
///   1. night window: Night iff z < night_tweet_chance, otherwise nothing.
///   2. event phase and z < q/(q + tweet_chance): EventRelated on an
///      influenced patch while the event is active and z < q; otherwise
///      EventRetweet if a neighbour emitted event content recently and z < q;
///      otherwise the routine gate below still applies.
///   3. z < tweet_chance: StandardRetweet when a neighbour emitted routine
///      content recently, otherwise Standard.
template <class EventRecent, class StandardRecent>
std::optional<TweetKind> decide_action(const GateState& g, double z, const GateChances& c,
                                       EventRecent&& neighbor_event_recent,
                                       StandardRecent&& neighbor_standard_recent) {
    if (g.night) {
        if (z < c.night_tweet_chance) return TweetKind::Night;
        return std::nullopt;
    }
    if (g.event_phase && z < g.q / (g.q + c.tweet_chance)) {
        if (z < g.q) {
            if (g.influenced && g.event_active) return TweetKind::EventRelated;
            if (neighbor_event_recent()) return TweetKind::EventRetweet;
        }
    }
    if (z < c.tweet_chance) {
        if (neighbor_standard_recent()) return TweetKind::StandardRetweet;
        return TweetKind::Standard;
    }
    return std::nullopt;
}

inline std::optional<TweetKind> decide_action(const GateState& g, double z, const GateChances& c,
                                              bool neighbor_event_recent,
                                              bool neighbor_standard_recent) {
    return decide_action(
        g, z, c, [=] { return neighbor_event_recent; }, [=] { return neighbor_standard_recent; });
}

// ---------------------------------------------------------------------------
// Event influence
// ---------------------------------------------------------------------------

/// Influence state of every patch for one event source.
class InfluenceField {
public:
    explicit InfluenceField(int half_extent);

    int half_extent() const noexcept { return half_extent_; }
    bool influenced(GridCoord c) const noexcept;
    /// Tick at which the patch became influenced.
    std::optional<int> influenced_since(GridCoord c) const noexcept;
    std::size_t count() const noexcept { return count_; }

    /// Influences every patch within Euclidean `radius` of `center`.
    void seed(GridCoord center, double radius, int t);
    /// Each uninfluenced patch adjacent to a patch influenced before `t`
    /// becomes influenced with `probability`.
    void grow(int t, double probability, bool eight_mode, Rng& rng);
    void clear();

private:
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y + half_extent_) * side_ + static_cast<std::size_t>(x + half_extent_);
    }

    int half_extent_;
    std::size_t side_;
    std::vector<int> since_;  // -1 when not influenced
    std::size_t count_ = 0;
};

/// All event sources with their influence fields.
struct EventState {
    std::vector<GridCoord> sources;
    std::vector<InfluenceField> fields;
    int event_tick = 0;
    int event_duration = 1;
    double initial_spread_radius = 3;
    double spread_rate = 1.0;
    bool eight_mode = true;

    EventState(std::vector<GridCoord> sources, int half_extent, int event_tick, int event_duration,
               double initial_spread_radius, double spread_rate, bool eight_mode);

    bool active(int t) const noexcept { return t >= event_tick && t < event_tick + event_duration; }
    bool influenced(GridCoord c) const noexcept;
    std::size_t influenced_count() const noexcept;
};

/// Frontier spread probability min(1, spread_rate / (t - t_event)).
double spread_probability(int t, int t_event, double spread_rate);

/// Advances influence to tick t: seeds at t_event, grows while active,
/// clears at t_event + event_duration.
void spread_event(EventState& state, int t, Rng& rng);

// ---------------------------------------------------------------------------
// Simulation
// ---------------------------------------------------------------------------

class Simulation {
public:
    explicit Simulation(const ValidatedConfig& config);

    /// Runs one tick and returns its counts.
    TickRecord step();

    int tick() const noexcept { return tick_; }
    const ValidatedConfig& config() const noexcept { return config_; }
    const std::vector<Agent>& agents() const noexcept { return agents_; }
    const Network& network() const noexcept { return network_; }
    const RingSet& rings() const noexcept { return rings_; }
    const EventState& event() const noexcept { return event_; }
    /// Tweets emitted during the last step.
    const std::vector<TweetEvent>& last_events() const noexcept { return events_; }

    bool night(int t) const noexcept;

private:
    bool recent(const std::vector<int>& last, AgentId a, int window) const;

    ValidatedConfig config_;
    std::vector<Agent> agents_;
    Network network_;
    RingSet rings_;
    EventState event_;
    Rng spread_rng_;
    Rng decision_rng_;
    EventTweetParams q_params_;
    GateChances chances_;

    std::vector<double> source_distance_;  // per agent, to the nearest source
    std::vector<int> agent_ring_;          // per agent, -1 outside the sensor
    std::vector<int> last_standard_;       // last tick of Standard/StandardRetweet
    std::vector<int> last_event_;          // last tick of EventRelated/EventRetweet
    std::vector<TweetEvent> events_;
    int tick_ = 0;
};

/// total_ticks records for the config's seed.
std::vector<TickRecord> run(const ValidatedConfig& config);

}  // namespace tweetsim
