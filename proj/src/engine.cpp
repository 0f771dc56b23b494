#include "tweetsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tweetsim {

std::string_view to_string(TweetKind kind) noexcept {
    switch (kind) {
        case TweetKind::Standard: return "standard";
        case TweetKind::EventRelated: return "event";
        case TweetKind::Night: return "night";
        case TweetKind::StandardRetweet: return "standard_retweet";
        case TweetKind::EventRetweet: return "event_retweet";
    }
    return "unknown";
}

double draw_z(Rng& rng, double tweet_threshold, double z_variance) {
    return rng.normal(tweet_threshold, std::sqrt(z_variance));
}

double event_tweet_probability(int t, int t_event, double d_event, const EventTweetParams& p) {
    const double dt = std::max(1.0, static_cast<double>(t - t_event));
    const double d = std::max(1.0, d_event);
    return p.event_tweet_chance * std::pow(dt, -p.ndist / p.alpha) * std::pow(d, -p.ndist / p.beta);
}

// ---------------------------------------------------------------------------

InfluenceField::InfluenceField(int half_extent)
    : half_extent_(half_extent),
      side_(static_cast<std::size_t>(2 * half_extent + 1)),
      since_(side_ * side_, -1) {}

bool InfluenceField::influenced(GridCoord c) const noexcept {
    if (!in_world(c, half_extent_)) return false;
    return since_[index(c.x, c.y)] >= 0;
}

std::optional<int> InfluenceField::influenced_since(GridCoord c) const noexcept {
    if (!in_world(c, half_extent_)) return std::nullopt;
    const int s = since_[index(c.x, c.y)];
    if (s < 0) return std::nullopt;
    return s;
}

void InfluenceField::seed(GridCoord center, double radius, int t) {
    const int r = static_cast<int>(std::floor(radius));
    for (int y = std::max(-half_extent_, center.y - r); y <= std::min(half_extent_, center.y + r); ++y) {
        for (int x = std::max(-half_extent_, center.x - r); x <= std::min(half_extent_, center.x + r); ++x) {
            if (distance({x, y}, center) > radius) continue;
            int& s = since_[index(x, y)];
            if (s < 0) {
                s = t;
                ++count_;
            }
        }
    }
}

void InfluenceField::grow(int t, double probability, bool eight_mode, Rng& rng) {
    const int h = half_extent_;
    // Patches marked this tick carry since == t and do not seed further growth.
    auto was_influenced = [&](int x, int y) {
        if (x < -h || x > h || y < -h || y > h) return false;
        const int s = since_[index(x, y)];
        return s >= 0 && s < t;
    };
    for (int y = -h; y <= h; ++y) {
        for (int x = -h; x <= h; ++x) {
            int& s = since_[index(x, y)];
            if (s >= 0) continue;
            bool frontier = was_influenced(x - 1, y) || was_influenced(x + 1, y) ||
                            was_influenced(x, y - 1) || was_influenced(x, y + 1);
            if (!frontier && eight_mode) {
                frontier = was_influenced(x - 1, y - 1) || was_influenced(x + 1, y - 1) ||
                           was_influenced(x - 1, y + 1) || was_influenced(x + 1, y + 1);
            }
            if (!frontier) continue;
            if (probability >= 1.0 || rng.uniform() < probability) {
                s = t;
                ++count_;
            }
        }
    }
}

void InfluenceField::clear() {
    std::fill(since_.begin(), since_.end(), -1);
    count_ = 0;
}

EventState::EventState(std::vector<GridCoord> srcs, int half_extent, int tick, int duration,
                       double initial_radius, double rate, bool eight)
    : sources(std::move(srcs)),
      event_tick(tick),
      event_duration(duration),
      initial_spread_radius(initial_radius),
      spread_rate(rate),
      eight_mode(eight) {
    fields.reserve(sources.size());
    for (std::size_t i = 0; i < sources.size(); ++i) fields.emplace_back(half_extent);
}

bool EventState::influenced(GridCoord c) const noexcept {
    return std::any_of(fields.begin(), fields.end(),
                       [c](const InfluenceField& f) { return f.influenced(c); });
}

std::size_t EventState::influenced_count() const noexcept {
    if (fields.size() == 1) return fields.front().count();
    if (fields.empty()) return 0;
    const int h = fields.front().half_extent();
    std::size_t n = 0;
    for (int y = -h; y <= h; ++y)
        for (int x = -h; x <= h; ++x)
            if (influenced({x, y})) ++n;
    return n;
}

double spread_probability(int t, int t_event, double spread_rate) {
    const int elapsed = t - t_event;
    if (elapsed <= 0) return 1.0;
    return std::min(1.0, spread_rate / static_cast<double>(elapsed));
}

void spread_event(EventState& state, int t, Rng& rng) {
    if (t == state.event_tick) {
        for (std::size_t i = 0; i < state.sources.size(); ++i)
            state.fields[i].seed(state.sources[i], state.initial_spread_radius, t);
    } else if (state.active(t)) {
        const double p = spread_probability(t, state.event_tick, state.spread_rate);
        for (auto& f : state.fields) f.grow(t, p, state.eight_mode, rng);
    } else if (t == state.event_tick + state.event_duration) {
        for (auto& f : state.fields) f.clear();
    }
}

// ---------------------------------------------------------------------------

namespace {
constexpr int kNever = std::numeric_limits<int>::min() / 2;
}

Simulation::Simulation(const ValidatedConfig& config)
    : config_(config),
      event_({}, config.fixed().world_half_extent, config->event_tick,
             config.variable().event_duration, config.fixed().initial_spread_radius,
             config.fixed().spread_rate, config.fixed().eight_mode),
      spread_rng_(make_stream(config->seed, Stream::Spread)),
      decision_rng_(make_stream(config->seed, Stream::Decisions)),
      q_params_(EventTweetParams::from(config)),
      chances_(GateChances::from(config.variable())) {
    Rng placement = make_stream(config->seed, Stream::Placement);
    Rng net = make_stream(config->seed, Stream::Network);
    Rng src = make_stream(config->seed, Stream::Sources);

    agents_ = place_users(config_, placement);
    network_ = build_network(config_, net);
    rings_ = build_rings(config_.fixed().step, config_->sensor_max_radius);
    event_ = EventState(place_event_sources(config_, src), config_.fixed().world_half_extent,
                        config_->event_tick, config_.variable().event_duration,
                        config_.fixed().initial_spread_radius, config_.fixed().spread_rate,
                        config_.fixed().eight_mode);

    const std::size_t n = agents_.size();
    source_distance_.resize(n);
    agent_ring_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& s : event_.sources) best = std::min(best, distance(agents_[i].position, s));
        source_distance_[i] = best;
        agent_ring_[i] = rings_.ring_of(distance(agents_[i].position, config_->sensor_location));
    }
    last_standard_.assign(n, kNever);
    last_event_.assign(n, kNever);
}

bool Simulation::night(int t) const noexcept {
    return config_.fixed().night_mode &&
           is_night_tick(t, config_.fixed().day_length, config_.variable().night_duration);
}

bool Simulation::recent(const std::vector<int>& last, AgentId a, int window) const {
    if (window <= 0) return false;
    const int cutoff = tick_ - window;
    for (AgentId nb : network_.neighbors(a))
        if (last[nb] >= cutoff) return true;
    return false;
}

TickRecord Simulation::step() {
    const int t = tick_;
    const SimulationConfig& cfg = config_.get();
    const FixedParams& f = cfg.fixed;

    if (cfg.event_enabled) spread_event(event_, t, spread_rng_);

    GateState base;
    base.night = night(t);
    base.event_active = cfg.event_enabled && event_.active(t);
    base.event_phase = cfg.event_enabled && t >= cfg.event_tick &&
                       t < cfg.event_tick + cfg.variable.event_duration + f.event_interest;

    TickRecord rec;
    rec.tick = t;
    rec.ring_counts.assign(rings_.radii.size(), 0);
    events_.clear();

    // Decisions read only emissions from earlier ticks; updates are applied after.
    for (const Agent& a : agents_) {
        const double z = draw_z(decision_rng_, f.tweet_threshold, f.z_variance);
        GateState g = base;
        if (g.event_phase) {
            g.q = event_tweet_probability(t, cfg.event_tick, source_distance_[a.id], q_params_);
            g.influenced = event_.influenced(a.position);
        }
        const auto kind = decide_action(
            g, z, chances_, [&] { return recent(last_event_, a.id, f.event_interest); },
            [&] { return recent(last_standard_, a.id, f.user_interest); });
        if (!kind) continue;

        events_.push_back({t, a.id, *kind, a.position});
        ++rec.counts[static_cast<std::size_t>(*kind)];
        ++rec.total;
        if (const int r = agent_ring_[a.id]; r >= 0) ++rec.ring_counts[static_cast<std::size_t>(r)];
    }

    for (const TweetEvent& e : events_) {
        switch (e.kind) {
            case TweetKind::Standard:
            case TweetKind::StandardRetweet: last_standard_[e.agent_id] = t; break;
            case TweetKind::EventRelated:
            case TweetKind::EventRetweet: last_event_[e.agent_id] = t; break;
            case TweetKind::Night: break;
        }
    }

    ++tick_;
    return rec;
}

std::vector<TickRecord> run(const ValidatedConfig& config) {
    Simulation sim(config);
    std::vector<TickRecord> out;
    out.reserve(static_cast<std::size_t>(config->total_ticks));
    for (int t = 0; t < config->total_ticks; ++t) out.push_back(sim.step());
    return out;
}

}  // namespace tweetsim
