#include "tweetsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tweetsim {

double CcfReport::at(int lag) const {
    const auto it = std::find(lags.begin(), lags.end(), lag);
    if (it == lags.end()) throw std::out_of_range("lag " + std::to_string(lag) + " not in report");
    return rho[static_cast<std::size_t>(it - lags.begin())];
}

double significance_threshold(std::size_t n) {
    if (n < 2) throw NumericError("significance threshold needs n >= 2");
    return 1.96 / std::sqrt(static_cast<double>(n));
}

CcfReport ccf(const CountSeries& x, const CountSeries& y, int max_lag) {
    const std::size_t n = x.size();
    if (y.size() != n)
        throw NumericError("series lengths differ (" + std::to_string(n) + " vs " +
                           std::to_string(y.size()) + ")");
    if (n < 2) throw NumericError("cross-correlation needs at least 2 ticks");
    if (max_lag < 0 || static_cast<std::size_t>(max_lag) >= n)
        throw NumericError("max_lag must be in [0, n)");

    std::vector<double> dx(n), dy(n);
    double mx = 0.0, my = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        mx += static_cast<double>(x.values[t]);
        my += static_cast<double>(y.values[t]);
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double vx = 0.0, vy = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        dx[t] = static_cast<double>(x.values[t]) - mx;
        dy[t] = static_cast<double>(y.values[t]) - my;
        vx += dx[t] * dx[t];
        vy += dy[t] * dy[t];
    }
    if (vx == 0.0) throw NumericError("series '" + x.label + "' has zero variance");
    if (vy == 0.0) throw NumericError("series '" + y.label + "' has zero variance");
    // Both sums carry the same 1/n, so it cancels in the ratio.
    const double norm = std::sqrt(vx * vy);

    CcfReport r;
    r.n = n;
    r.means = {mx, my};
    r.threshold = significance_threshold(n);
    r.lags.reserve(static_cast<std::size_t>(2 * max_lag + 1));
    r.rho.reserve(r.lags.capacity());
    for (int k = -max_lag; k <= max_lag; ++k) {
        const std::size_t lo = k < 0 ? static_cast<std::size_t>(-k) : 0;
        const std::size_t hi = k > 0 ? n - static_cast<std::size_t>(k) : n;
        double acc = 0.0;
        for (std::size_t t = lo; t < hi; ++t)
            acc += dx[t] * dy[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(t) + k)];
        r.lags.push_back(k);
        r.rho.push_back(acc / norm);
    }
    return r;
}

CountSeries uniform_baseline(std::size_t n, const CountSeries& reference, Rng& rng) {
    if (n < 1) throw NumericError("baseline length must be at least 1");
    const std::int64_t hi = reference.max();
    if (hi < 1) throw NumericError("reference maximum must be at least 1");
    CountSeries out;
    out.label = "uniform_baseline";
    out.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.values.push_back(rng.between(1, hi));
    return out;
}

CcfSummary compare(const CountSeries& synthetic, const CountSeries& reference, int max_lag) {
    CcfSummary s;
    s.report = ccf(synthetic, reference, max_lag);
    s.rho0 = s.report.at(0);
    s.lag0_significant = std::abs(s.rho0) > s.report.threshold;
    const auto over = std::count_if(s.report.rho.begin(), s.report.rho.end(),
                                    [&](double v) { return std::abs(v) > s.report.threshold; });
    s.significant_fraction = static_cast<double>(over) / static_cast<double>(s.report.rho.size());
    return s;
}

}  // namespace tweetsim
