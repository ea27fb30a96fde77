#include "lrpc/shake.hpp"

#include <cstring>

namespace lrpc {

namespace {

constexpr size_t kRate = 136;  // SHAKE256 rate in bytes

constexpr uint64_t kRoundConstants[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Shake256::Shake256() : pos_(0), squeezing_(false) {
    std::memset(state_, 0, sizeof(state_));
}

void Shake256::permute() {
    // rotation offsets and the pi permutation, indexed as x + 5y
    static constexpr int kRho[25] = {0,  1,  62, 28, 27, 36, 44, 6,  55, 20, 3,  10, 43,
                                     25, 39, 41, 45, 15, 21, 8,  18, 2,  61, 56, 14};
    uint64_t* a = state_;
    for (int round = 0; round < 24; ++round) {
        // theta
        uint64_t c[5], d[5];
        for (int x = 0; x < 5; ++x)
            c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        for (int x = 0; x < 5; ++x) d[x] = c[(x + 4) % 5] ^ rotl(c[(x + 1) % 5], 1);
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y) a[x + 5 * y] ^= d[x];
        // rho + pi: b[y, 2x+3y] = rotl(a[x, y])
        uint64_t b[25];
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                b[y + 5 * ((2 * x + 3 * y) % 5)] = rotl(a[x + 5 * y], kRho[x + 5 * y]);
        // chi
        for (int y = 0; y < 5; ++y)
            for (int x = 0; x < 5; ++x)
                a[x + 5 * y] =
                    b[x + 5 * y] ^ ((~b[(x + 1) % 5 + 5 * y]) & b[(x + 2) % 5 + 5 * y]);
        // iota
        a[0] ^= kRoundConstants[round];
    }
}

void Shake256::absorb(const uint8_t* data, size_t len) {
    uint8_t* bytes = reinterpret_cast<uint8_t*>(state_);
    for (size_t i = 0; i < len; ++i) {
        bytes[pos_++] ^= data[i];
        if (pos_ == kRate) {
            permute();
            pos_ = 0;
        }
    }
}

void Shake256::finalize() {
    uint8_t* bytes = reinterpret_cast<uint8_t*>(state_);
    bytes[pos_] ^= 0x1f;
    bytes[kRate - 1] ^= 0x80;
    permute();
    pos_ = 0;
    squeezing_ = true;
}

void Shake256::squeeze(uint8_t* out, size_t len) {
    const uint8_t* bytes = reinterpret_cast<const uint8_t*>(state_);
    for (size_t i = 0; i < len; ++i) {
        if (pos_ == kRate) {
            permute();
            pos_ = 0;
        }
        out[i] = bytes[pos_++];
    }
}

std::vector<uint8_t> Shake256::digest(const std::vector<uint8_t>& data, size_t out_len) {
    Shake256 s;
    s.absorb(data);
    s.finalize();
    std::vector<uint8_t> out(out_len);
    s.squeeze(out.data(), out_len);
    return out;
}

}  // namespace lrpc
