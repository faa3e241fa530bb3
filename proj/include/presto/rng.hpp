#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace presto {

/// SplitMix64 generator with deterministic substreams.
///
/// The state advances by a fixed odd constant and the output is a bijective
/// mix of the counter, so every (seed, stream) pair yields an independent,
/// reproducible sequence. Batch runs use stream = run index.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(mix(seed ^ kGamma)) {}

    SplitMix64(std::uint64_t seed, std::uint64_t stream)
        : state_(mix(seed ^ kGamma) ^ mix(stream * kGamma + 1)) {}

    std::uint64_t next() {
        state_ += kGamma;
        return mix(state_);
    }

    // UniformRandomBitGenerator interface
    result_type operator()() { return next(); }
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<std::uint64_t>::max(); }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Standard normal deviate (Box-Muller, no cached spare so the call
    /// sequence is position-independent).
    double gaussian() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double gaussian(double mean, double sigma) { return mean + sigma * gaussian(); }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace presto
