#pragma once

// Cross-correlation of a synthetic count series against a reference.

#include <cstdint>
#include <utility>
#include <vector>

#include "tweetsim/core.hpp"
#include "tweetsim/random.hpp"

namespace tweetsim {

/// rho[i] is the correlation at lags[i]; positive lag k pairs x_t with y_{t+k}.
struct CcfReport {
    std::vector<int> lags;
    std::vector<double> rho;
    double threshold = 0.0;
    std::size_t n = 0;
    std::pair<double, double> means{0.0, 0.0};

    double at(int lag) const;
};

/// Stationary sample cross-correlation over lags -max_lag..max_lag:
///   gamma(k) = (1/n) sum_t (x_t - mean_x)(y_{t+k} - mean_y)
///   rho(k)   = gamma(k) / sqrt(var_x * var_y)
/// with var the 1/n sample variances. Throws NumericError on length
/// mismatch, n < 2, max_lag >= n or a constant series.
CcfReport ccf(const CountSeries& x, const CountSeries& y, int max_lag);

/// White-noise band 1.96 / sqrt(n).
double significance_threshold(std::size_t n);

/// n integers uniform on [1, max(reference)].
CountSeries uniform_baseline(std::size_t n, const CountSeries& reference, Rng& rng);

struct CcfSummary {
    CcfReport report;
    double rho0 = 0.0;
    bool lag0_significant = false;
    double significant_fraction = 0.0;  // share of lags with |rho| > threshold
};

CcfSummary compare(const CountSeries& synthetic, const CountSeries& reference, int max_lag);

}  // namespace tweetsim
