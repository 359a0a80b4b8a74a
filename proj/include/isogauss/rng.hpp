#pragma once

#include <cmath>
#include <cstdint>

namespace isogauss {

// SplitMix64 generator. The 64-bit integer stream is bit-identical for a
// given seed on every platform; real-valued draws layer libm transforms
// (log, sqrt, cos) on top of that stream.
//
// An Rng is single-owner. Parallel work derives decorrelated child streams
// with child(index) instead of sharing one instance.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return finalize(state_);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller; the second deviate of each pair is cached.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        // 1 - u in (0, 1] keeps the log argument away from zero.
        const double u1 = 1.0 - uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // Zero-mean Laplace with scale b (variance 2b^2).
    double laplace(double b) {
        const double u = uniform01() - 0.5;
        const double m = 1.0 - 2.0 * std::abs(u);           // in (0, 1]
        return (u < 0.0 ? b : -b) * std::log(m);
    }

    // Zero-mean logistic with scale s (variance pi^2 s^2 / 3).
    double logistic(double s) {
        double u = uniform01();
        if (u <= 0.0) u = 0x1.0p-53;
        return s * std::log(u / (1.0 - u));
    }

    // Derive a decorrelated child stream from the original seed and an index.
    // Independent of how many draws this instance has produced.
    Rng child(std::uint64_t index) const {
        std::uint64_t s = seed_ + 0x9E3779B97F4A7C15ULL * (index + 1);
        return Rng(finalize(finalize(s)));
    }

private:
    static std::uint64_t finalize(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace isogauss
