// Copyright 2026 The tgi3d Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TGI3D_RNG_HPP
#define TGI3D_RNG_HPP

#include <cmath>
#include <cstdint>

namespace tgi {

/// splitmix64 finalizer; bijective on 64-bit integers.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Derives one stream key from a seed and up to three counters (pulse
/// index, pixel coordinates, ...). Streams keyed this way are independent
/// of generation order, which keeps parallel construction deterministic.
constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t a,
                                   std::uint64_t b = 0x6a09e667f3bcc908ull,
                                   std::uint64_t c = 0xbb67ae8584caa73bull) noexcept {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ mix64(a));
    h = mix64(h ^ mix64(b));
    h = mix64(h ^ mix64(c));
    return h;
}

/// xoshiro256++ seeded via splitmix64 from a single 64-bit key.
class rng256 {
  public:
    explicit rng256(std::uint64_t key) noexcept {
        std::uint64_t sm = key;
        for (auto& word : state_) {
            sm += 0x9e3779b97f4a7c15ull;
            std::uint64_t z = sm;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller. std::normal_distribution is
    /// implementation-defined, so the transform is spelled out here.
    double gaussian() noexcept {
        // u1 in (0, 1] so the log stays finite.
        const double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

}  // namespace tgi

#endif
