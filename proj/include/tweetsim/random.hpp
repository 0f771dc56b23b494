#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace tweetsim {

/// Seeded random stream. The engine is std::mt19937_64; the variate
/// transforms are written out here because the std distributions are
/// implementation-defined, and runs must reproduce bit-exactly from a
/// manifest on any toolchain.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Requires n > 0.
    std::uint64_t below(std::uint64_t n) {
        // Lemire's nearly-divisionless method.
        unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = -n % n;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(engine_()) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Standard normal by Box-Muller, two uniforms per draw, no cached spare.
    double standard_normal() {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * standard_normal(); }

private:
    std::mt19937_64 engine_;
};

/// Independent sub-stream seeds derived from one run seed.
enum class Stream : std::uint64_t {
    Placement = 1,
    Network = 2,
    Sources = 3,
    Spread = 4,
    Decisions = 5,
    Baseline = 6,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline Rng make_stream(std::uint64_t seed, Stream s) {
    return Rng(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(s)));
}

}  // namespace tweetsim
