#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lrpc {

/// SHAKE256 extendable-output function (Keccak-f[1600], rate 136).
/// Incremental absorb, then squeeze any number of bytes.
class Shake256 {
public:
    Shake256();
    void absorb(const uint8_t* data, size_t len);
    void absorb(const std::vector<uint8_t>& data) { absorb(data.data(), data.size()); }
    /// Finish absorbing; squeeze() may then be called repeatedly.
    void finalize();
    void squeeze(uint8_t* out, size_t len);

    static std::vector<uint8_t> digest(const std::vector<uint8_t>& data, size_t out_len);

private:
    void permute();
    uint64_t state_[25];
    size_t pos_;
    bool squeezing_;
};

}  // namespace lrpc
