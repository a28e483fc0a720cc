#pragma once

#include <cstdint>
#include <cmath>
#include <random>

namespace swarmseek {

/// All randomness flows through one engine type so that a seed fully
/// determines a run. Draw helpers below avoid std::*_distribution, whose
/// output is implementation-defined; these are bit-reproducible anywhere
/// mt19937_64 is (i.e. everywhere, it is specified exactly).
using RngEngine = std::mt19937_64;

/// SplitMix64 finalizer. Good avalanche, used only for seed derivation.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Derives an independent stream seed from (master, a, b); used to give
/// every (cell, run) of a Monte Carlo grid its own stream.
constexpr std::uint64_t mix_seed(std::uint64_t master, std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ (0x9E3779B97F4A7C15ull * (a + 1)));
    s = splitmix64(s ^ (0xC2B2AE3D27D4EB4Full * (b + 1)));
    return s;
}

inline RngEngine make_stream(std::uint64_t master, std::uint64_t a = 0, std::uint64_t b = 0) {
    return RngEngine(mix_seed(master, a, b));
}

/// Uniform double in [0, 1), 53-bit resolution, exactly one engine call.
inline double uniform_unit(RngEngine& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_in(RngEngine& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

/// Uniform index in [0, n). Rejection sampling, unbiased.
inline std::size_t uniform_index(RngEngine& rng, std::size_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t x = rng();
    while (x > limit) x = rng();
    return static_cast<std::size_t>(x % n);
}

/// Gaussian draw via Box-Muller; consumes exactly two engine calls.
inline double gaussian(RngEngine& rng, double mean, double stddev) {
    const double u1 = 1.0 - uniform_unit(rng);  // (0, 1], keeps log finite
    const double u2 = uniform_unit(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace swarmseek
