// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/encoding/keccak.hpp>

#include <bit>
#include <cstring>

namespace evmport {

namespace {

constexpr uint64_t kRoundConstants[24] = {
    0x0000000000000001, 0x0000000000008082, 0x800000000000808a, 0x8000000080008000,
    0x000000000000808b, 0x0000000080000001, 0x8000000080008081, 0x8000000000008009,
    0x000000000000008a, 0x0000000000000088, 0x0000000080008009, 0x000000008000000a,
    0x000000008000808b, 0x800000000000008b, 0x8000000000008089, 0x8000000000008003,
    0x8000000000008002, 0x8000000000000080, 0x000000000000800a, 0x800000008000000a,
    0x8000000080008081, 0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
};

constexpr int kRotation[24] = {1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
                               27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44};

constexpr int kPiLane[24] = {10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
                             15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1};

void keccak_f1600(uint64_t st[25]) noexcept {
    for (int round = 0; round < 24; ++round) {
        // theta
        uint64_t bc[5];
        for (int i = 0; i < 5; ++i)
            bc[i] = st[i] ^ st[i + 5] ^ st[i + 10] ^ st[i + 15] ^ st[i + 20];
        for (int i = 0; i < 5; ++i) {
            const uint64_t t = bc[(i + 4) % 5] ^ std::rotl(bc[(i + 1) % 5], 1);
            for (int j = 0; j < 25; j += 5)
                st[j + i] ^= t;
        }
        // rho and pi
        uint64_t t = st[1];
        for (int i = 0; i < 24; ++i) {
            const int j = kPiLane[i];
            const uint64_t tmp = st[j];
            st[j] = std::rotl(t, kRotation[i]);
            t = tmp;
        }
        // chi
        for (int j = 0; j < 25; j += 5) {
            for (int i = 0; i < 5; ++i)
                bc[i] = st[j + i];
            for (int i = 0; i < 5; ++i)
                st[j + i] = bc[i] ^ (~bc[(i + 1) % 5] & bc[(i + 2) % 5]);
        }
        // iota
        st[0] ^= kRoundConstants[round];
    }
}

uint64_t load_le64(const uint8_t* p) noexcept {
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i)
        v = (v << 8) | p[i];
    return v;
}

void store_le64(uint8_t* p, uint64_t v) noexcept {
    for (int i = 0; i < 8; ++i) {
        p[i] = static_cast<uint8_t>(v & 0xff);
        v >>= 8;
    }
}

constexpr size_t kRate = 136;  // 1088-bit rate for a 256-bit digest

void absorb(uint64_t st[25], const uint8_t block[kRate]) noexcept {
    for (size_t i = 0; i < kRate / 8; ++i)
        st[i] ^= load_le64(block + 8 * i);
    keccak_f1600(st);
}

}  // namespace

Hash32 keccak256(ByteView data) {
    uint64_t st[25] = {};

    while (data.size() >= kRate) {
        absorb(st, data.data());
        data.remove_prefix(kRate);
    }

    uint8_t block[kRate] = {};
    if (!data.empty())
        std::memcpy(block, data.data(), data.size());
    block[data.size()] ^= 0x01;
    block[kRate - 1] ^= 0x80;
    absorb(st, block);

    Hash32 out;
    for (size_t i = 0; i < 4; ++i)
        store_le64(out.data() + 8 * i, st[i]);
    return out;
}

}  // namespace evmport
