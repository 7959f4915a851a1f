#ifndef PCF_RNG_HPP
#define PCF_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace pcf {

/// Seeded random generator with a fixed, implementation-independent mapping
/// from engine output to uniforms and normals, so frozen test values and
/// byte-identical CLI reruns hold on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (cosine branch only).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    /// Integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform() * (static_cast<double>(hi) - lo + 1.0));
    }

    /// Decorrelated per-replicate seed stream (splitmix64 finalizer).
    static std::uint64_t stream_seed(std::uint64_t base, std::uint64_t index) {
        std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace pcf

#endif
