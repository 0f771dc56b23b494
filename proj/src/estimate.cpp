#include "tweetsim/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace tweetsim {

namespace {

// Linear-interpolated quantile of a sorted sample.
double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

std::vector<bool> detect_night_mask(const CountSeries& series, int night_duration) {
    check_series(series);
    const std::size_t n = series.size();
    std::vector<double> sorted(series.values.begin(), series.values.end());
    std::sort(sorted.begin(), sorted.end());
    const double p25 = quantile_sorted(sorted, 0.25);
    const double top = sorted.back();

    std::vector<bool> low(n);
    for (std::size_t t = 0; t < n; ++t) {
        const auto v = static_cast<double>(series.values[t]);
        low[t] = v <= p25 && v < top;
    }

    const std::size_t min_run = static_cast<std::size_t>(std::max(1, night_duration / 2));
    std::vector<bool> mask(n, false);
    for (std::size_t t = 0; t < n;) {
        if (!low[t]) {
            ++t;
            continue;
        }
        std::size_t end = t;
        while (end < n && low[end]) ++end;
        if (end - t >= min_run) std::fill(mask.begin() + static_cast<std::ptrdiff_t>(t),
                                          mask.begin() + static_cast<std::ptrdiff_t>(end), true);
        t = end;
    }
    return mask;
}

SegmentStats segment_series(const CountSeries& series, int event_tick,
                            const std::optional<std::vector<bool>>& night_mask,
                            int night_duration) {
    check_series(series);
    const std::size_t n = series.size();
    if (n < 3) throw NumericError("segmenting needs at least 3 ticks");
    if (event_tick <= 0 || static_cast<std::size_t>(event_tick) >= n)
        throw NumericError("event tick " + std::to_string(event_tick) + " must lie in (0, " +
                           std::to_string(n) + ")");

    SegmentStats s;
    if (night_mask) {
        if (night_mask->size() != n)
            throw NumericError("night mask length differs from series length");
        s.night_mask = *night_mask;
    } else {
        s.night_mask = detect_night_mask(series, night_duration);
    }

    double sum[3] = {0, 0, 0};
    std::size_t cnt[3] = {0, 0, 0};
    for (std::size_t t = 0; t < n; ++t) {
        const int seg = s.night_mask[t] ? 0 : (static_cast<int>(t) < event_tick ? 1 : 2);
        sum[seg] += static_cast<double>(series.values[t]);
        ++cnt[seg];
    }
    if (cnt[1] == 0) throw NumericError("pre-event segment is empty");
    if (cnt[2] == 0) throw NumericError("post-event segment is empty");
    s.tweets_night = cnt[0] ? sum[0] / static_cast<double>(cnt[0]) : 0.0;
    s.tweets_pre_event = sum[1] / static_cast<double>(cnt[1]);
    s.tweets_post_event = sum[2] / static_cast<double>(cnt[2]);
    return s;
}

EstimatedProbabilities estimate_probabilities(const SegmentStats& s) {
    const double denom = s.tweets_night + s.tweets_pre_event + s.tweets_post_event;
    if (!(denom > 0.0)) throw NumericError("segment means sum to zero");
    return {s.tweets_pre_event / denom, s.tweets_post_event / denom, s.tweets_night / denom};
}

std::vector<double> smooth_series(const CountSeries& series, const std::vector<bool>& night_mask,
                                  int window) {
    const std::size_t n = series.size();
    if (night_mask.size() != n) throw NumericError("night mask length differs from series length");
    const int w = std::max(1, window);
    const int before = (w - 1) / 2;
    const int after = w - 1 - before;

    std::vector<double> out(n, std::numeric_limits<double>::quiet_NaN());
    for (std::size_t t = 0; t < n; ++t) {
        double acc = 0.0;
        int used = 0;
        const auto ti = static_cast<std::ptrdiff_t>(t);
        for (std::ptrdiff_t j = std::max<std::ptrdiff_t>(0, ti - before);
             j <= std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(n) - 1, ti + after); ++j) {
            if (night_mask[static_cast<std::size_t>(j)]) continue;
            acc += static_cast<double>(series.values[static_cast<std::size_t>(j)]);
            ++used;
        }
        if (used > 0) out[t] = acc / used;
    }
    return out;
}

int estimate_event_duration(const CountSeries& series, int event_tick, const SegmentStats& stats,
                            int smoothing_window) {
    const std::size_t n = series.size();
    if (event_tick < 0 || static_cast<std::size_t>(event_tick) >= n)
        throw NumericError("event tick outside the series");
    const auto smoothed = smooth_series(series, stats.night_mask, smoothing_window);

    int duration = 0;
    for (std::size_t t = static_cast<std::size_t>(event_tick); t < n; ++t) {
        if (stats.night_mask[t] || std::isnan(smoothed[t])) continue;
        if (smoothed[t] > stats.tweets_pre_event)
            duration = static_cast<int>(t) - event_tick + 1;
        else
            break;
    }
    return duration;
}

}  // namespace tweetsim
