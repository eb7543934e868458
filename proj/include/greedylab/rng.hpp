#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace greedylab {

// Deterministic counter-based random stream.
//
// Each stream is identified by (seed, label).  Output k of a stream is
//   finalize(base + (k+1) * GOLDEN),  base = seed ^ fnv1a64(label)
// where finalize is the splitmix64 finalizer.  Streams are therefore
// reproducible across platforms and independent of call interleaving;
// the same (seed, label, k) always yields the same value.
class Rng {
public:
    static constexpr std::uint64_t GOLDEN = 0x9E3779B97F4A7C15ull;

    static constexpr std::uint64_t fnv1a64(std::string_view s) {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        return h;
    }

    static constexpr std::uint64_t finalize(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    Rng(std::uint64_t seed, std::string_view label)
        : base_(seed ^ fnv1a64(label)) {}

    std::uint64_t next_u64() {
        ++counter_;
        return finalize(base_ + counter_ * GOLDEN);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Uniform integer in [0, n); n must be positive.
    std::uint64_t uniform_int(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    int sign() { return (next_u64() >> 63) ? 1 : -1; }

    // Standard normal via Box-Muller; one spare value is cached.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1] so the logarithm is finite.
        double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace greedylab
