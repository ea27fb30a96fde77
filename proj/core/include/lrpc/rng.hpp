#pragma once

#include <array>
#include <cstdint>

namespace lrpc {

/// xoshiro256** seeded through splitmix64. Deterministic given the seed,
/// cheap enough for the simulation inner loops.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t z = seed;
        for (auto& si : s_) {
            z += 0x9e3779b97f4a7c15ULL;
            uint64_t t = z;
            t = (t ^ (t >> 30)) * 0xbf58476d1ce4e5b9ULL;
            t = (t ^ (t >> 27)) * 0x94d049bb133111ebULL;
            si = t ^ (t >> 31);
        }
    }

    /// Seed from 32 bytes (e.g. a CLI-supplied hex seed), mixed through
    /// splitmix64 so that no state word can end up zero-correlated.
    explicit Rng(const uint8_t seed[32]) {
        for (int i = 0; i < 4; ++i) {
            uint64_t w = 0;
            for (int j = 0; j < 8; ++j) w |= uint64_t(seed[i * 8 + j]) << (8 * j);
            uint64_t t = w + 0x9e3779b97f4a7c15ULL * uint64_t(i + 1);
            t = (t ^ (t >> 30)) * 0xbf58476d1ce4e5b9ULL;
            t = (t ^ (t >> 27)) * 0x94d049bb133111ebULL;
            s_[i] = t ^ (t >> 31);
        }
    }

    uint64_t next() {
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, bound) by rejection; bound must be nonzero.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<uint64_t, 4> s_;
};

}  // namespace lrpc
