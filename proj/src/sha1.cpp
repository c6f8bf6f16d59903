#include "ocedforge/sha1.hpp"

#include <bit>
#include <cstring>

namespace ocedforge {

namespace {

inline std::uint32_t rol(std::uint32_t v, int bits) {
    return (v << bits) | (v >> (32 - bits));
}

struct Sha1State {
    std::uint32_t h[5] = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u, 0xC3D2E1F0u};

    void process(const std::uint8_t* block) {
        std::uint32_t w[80];
        for (int i = 0; i < 16; ++i) {
            w[i] = (static_cast<std::uint32_t>(block[i * 4]) << 24) |
                   (static_cast<std::uint32_t>(block[i * 4 + 1]) << 16) |
                   (static_cast<std::uint32_t>(block[i * 4 + 2]) << 8) |
                   static_cast<std::uint32_t>(block[i * 4 + 3]);
        }
        for (int i = 16; i < 80; ++i)
            w[i] = rol(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);

        std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
        for (int i = 0; i < 80; ++i) {
            std::uint32_t f, k;
            if (i < 20) {
                f = (b & c) | (~b & d);
                k = 0x5A827999u;
            } else if (i < 40) {
                f = b ^ c ^ d;
                k = 0x6ED9EBA1u;
            } else if (i < 60) {
                f = (b & c) | (b & d) | (c & d);
                k = 0x8F1BBCDCu;
            } else {
                f = b ^ c ^ d;
                k = 0xCA62C1D6u;
            }
            std::uint32_t tmp = rol(a, 5) + f + e + k + w[i];
            e = d;
            d = c;
            c = rol(b, 30);
            b = a;
            a = tmp;
        }
        h[0] += a;
        h[1] += b;
        h[2] += c;
        h[3] += d;
        h[4] += e;
    }
};

}  // namespace

std::array<std::uint8_t, 20> sha1(std::string_view data) {
    Sha1State state;
    const auto* bytes = reinterpret_cast<const std::uint8_t*>(data.data());
    std::size_t full = data.size() / 64;
    for (std::size_t i = 0; i < full; ++i) state.process(bytes + i * 64);

    std::uint8_t tail[128] = {};
    std::size_t rest = data.size() - full * 64;
    if (rest > 0) std::memcpy(tail, bytes + full * 64, rest);
    tail[rest] = 0x80;
    std::size_t tail_len = rest < 56 ? 64 : 128;
    std::uint64_t bit_len = static_cast<std::uint64_t>(data.size()) * 8;
    for (int i = 0; i < 8; ++i)
        tail[tail_len - 1 - i] = static_cast<std::uint8_t>(bit_len >> (i * 8));
    state.process(tail);
    if (tail_len == 128) state.process(tail + 64);

    std::array<std::uint8_t, 20> digest{};
    for (int i = 0; i < 5; ++i) {
        digest[i * 4] = static_cast<std::uint8_t>(state.h[i] >> 24);
        digest[i * 4 + 1] = static_cast<std::uint8_t>(state.h[i] >> 16);
        digest[i * 4 + 2] = static_cast<std::uint8_t>(state.h[i] >> 8);
        digest[i * 4 + 3] = static_cast<std::uint8_t>(state.h[i]);
    }
    return digest;
}

std::string sha1_hex(std::string_view data) {
    static const char* hex = "0123456789abcdef";
    auto digest = sha1(data);
    std::string out;
    out.reserve(40);
    for (auto b : digest) {
        out += hex[b >> 4];
        out += hex[b & 0xF];
    }
    return out;
}

}  // namespace ocedforge
