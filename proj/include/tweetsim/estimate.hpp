#pragma once

// Scenario probabilities and event duration from an observed count series.

#include <optional>
#include <vector>

#include "tweetsim/core.hpp"

namespace tweetsim {

struct SegmentStats {
    double tweets_night = 0.0;
    double tweets_pre_event = 0.0;
    double tweets_post_event = 0.0;
    std::vector<bool> night_mask;
};

struct EstimatedProbabilities {
    double tweet_chance = 0.0;
    double event_tweet_chance = 0.0;
    double night_tweet_chance = 0.0;
};

/// Low-activity ticks: count <= 25th percentile of the series and inside a
/// run of at least max(1, night_duration / 2) such ticks.
std::vector<bool> detect_night_mask(const CountSeries& series, int night_duration);

/// Splits the series into night, pre-event (non-night, t < event_tick) and
/// post-event (non-night, t >= event_tick) and averages each. Without a mask
/// the night ticks are detected with detect_night_mask. A series without
/// any night tick gets tweets_night = 0; an empty pre or post segment is a
/// NumericError.
SegmentStats segment_series(const CountSeries& series, int event_tick,
                            const std::optional<std::vector<bool>>& night_mask,
                            int night_duration = 8);

/// Each segment mean over the sum of the three.
EstimatedProbabilities estimate_probabilities(const SegmentStats& stats);

/// Consecutive ticks from event_tick whose smoothed count exceeds the
/// pre-event mean. Night ticks neither end the run nor enter the smoothing.
int estimate_event_duration(const CountSeries& series, int event_tick, const SegmentStats& stats,
                            int smoothing_window = 3);

/// Centered moving average of the non-night values in each window.
/// Ticks whose window holds no day value are NaN.
std::vector<double> smooth_series(const CountSeries& series, const std::vector<bool>& night_mask,
                                  int window);

}  // namespace tweetsim
