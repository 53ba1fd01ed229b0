#pragma once

#include <cmath>
#include <cstdint>

namespace eigencone {

/// Deterministic random stream with fully specified state transitions, so
/// sampling reports are reproducible across platforms and thread counts.
///
/// Seeding: SplitMix64 over the 64-bit seed
///     z = (state += 0x9E3779B97F4A7C15)
///     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///     return z ^ (z >> 31)
/// fills the four xoshiro256** words.
///
/// Stream: xoshiro256**
///     result = rotl(s1 * 5, 7) * 9
///     t = s1 << 17; s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3; s2 ^= t;
///     s3 = rotl(s3, 45)
///
/// Substreams: trial t of master seed m starts from SplitMix64 seeded with
/// m XOR (0x9E3779B97F4A7C15 * (t + 1)), making trials independent of how
/// they are partitioned among threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    static Rng substream(std::uint64_t seed, std::uint64_t trial) {
        return Rng(substream_seed(seed, trial));
    }

    static std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial) {
        return seed ^ (0x9E3779B97F4A7C15ull * (trial + 1));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, 1), 53 significant bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1], safe as a logarithm argument.
    double uniform_positive() {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal pair via the Box-Muller transform (explicit so the
    /// sequence does not depend on a library's distribution internals).
    void gaussian_pair(double& z0, double& z1) {
        const double u = uniform_positive();
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double a = 6.283185307179586476925286766559 * v;
        z0 = r * std::cos(a);
        z1 = r * std::sin(a);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    static std::uint64_t splitmix64(std::uint64_t& state) {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t s_[4];
};

}  // namespace eigencone
