#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace certidom {

/// Seed used everywhere a seed is not given explicitly.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Deterministic random source. mt19937_64 output is pinned by the standard
/// and the derived draws below avoid std::*_distribution, whose sequences are
/// implementation-defined, so identical seeds give identical streams on every
/// platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [0, bound), bound >= 1, by rejection sampling.
    int bounded(int bound) {
        auto b = static_cast<std::uint64_t>(bound);
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % b);
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return static_cast<int>(x % b);
    }

    /// Uniform double in [0, 1) with 53 bits.
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 eng_;
};

/// FNV-1a fold of a tag and two numeric components into a derived seed, so
/// per-graph/per-check streams do not depend on sweep partitioning.
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag, std::uint64_t salt = 0) {
    std::uint64_t h = 1469598103934665603ull;
    auto eat = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    eat(seed);
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    eat(salt);
    return h;
}

}  // namespace certidom
