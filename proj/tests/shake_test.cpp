#include <doctest.h>

#include <cstring>
#include <string>

#include "lrpc/shake.hpp"

using namespace lrpc;

namespace {

std::string hex(const std::vector<uint8_t>& v) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (uint8_t b : v) {
        out += digits[b >> 4];
        out += digits[b & 15];
    }
    return out;
}

std::vector<uint8_t> shake(const std::vector<uint8_t>& in, size_t outlen) {
    Shake256 s;
    s.absorb(in.data(), in.size());
    s.finalize();
    std::vector<uint8_t> out(outlen);
    s.squeeze(out.data(), outlen);
    return out;
}

}  // namespace

TEST_CASE("SHAKE256 known-answer vectors") {
    CHECK(hex(shake({}, 32)) ==
          "46b9dd2b0ba88d13233b3feb743eeb243fcd52ea62b81b82b50c27646ed5762f");
    CHECK(hex(shake({'a', 'b', 'c'}, 32)) ==
          "483366601360a8771c6863080cc4114d8db44530f8f1e1ee4f94ea37e78b5739");
    const char* fox = "The quick brown fox jumps over the lazy dog";
    CHECK(hex(shake(std::vector<uint8_t>(fox, fox + strlen(fox)), 64)) ==
          "2f671343d9b2e1604dc9dcf0753e5fe15c7c64a0d283cbbf722d411a0e36f6ca"
          "1d01d1369a23539cd80f7c054b6e5daf9c962cad5b8ed5bd11998b40d5734442");
    // input longer than one rate block (136 bytes)
    std::vector<uint8_t> long_in(200);
    for (size_t i = 0; i < 200; ++i) long_in[i] = uint8_t(i);
    CHECK(hex(shake(long_in, 16)) == "4ee1ca03272b05d3bfb1e1c79a967f82");
}

TEST_CASE("incremental absorption matches one-shot") {
    std::vector<uint8_t> data(777);
    for (size_t i = 0; i < data.size(); ++i) data[i] = uint8_t(i * 31 + 7);
    std::vector<uint8_t> oneshot = shake(data, 96);

    Shake256 s;
    size_t off = 0;
    for (size_t chunk : {1u, 7u, 135u, 136u, 137u, 300u, 61u}) {
        s.absorb(data.data() + off, std::min(chunk, data.size() - off));
        off += std::min(chunk, data.size() - off);
    }
    REQUIRE(off == data.size());
    s.finalize();
    // squeeze in ragged pieces too
    std::vector<uint8_t> out(96);
    s.squeeze(out.data(), 13);
    s.squeeze(out.data() + 13, 70);
    s.squeeze(out.data() + 83, 13);
    CHECK(out == oneshot);
}

TEST_CASE("distinct inputs give distinct streams") {
    CHECK(shake({0}, 32) != shake({1}, 32));
    CHECK(shake({0}, 32) != shake({0, 0}, 32));
}
