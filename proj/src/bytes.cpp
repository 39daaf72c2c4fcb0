// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/bytes.hpp>

namespace evmport {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int unhex_digit(char c) noexcept {
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string to_hex(ByteView data, bool with_prefix) {
    std::string out;
    out.reserve(data.size() * 2 + 2);
    if (with_prefix)
        out += "0x";
    for (uint8_t b : data) {
        out += kHexDigits[b >> 4];
        out += kHexDigits[b & 0x0f];
    }
    return out;
}

std::string to_hex(const Address& a, bool with_prefix) {
    return to_hex(view(a), with_prefix);
}

std::string to_hex(const Hash32& h, bool with_prefix) {
    return to_hex(view(h), with_prefix);
}

std::optional<Bytes> from_hex(std::string_view hex) {
    if (hex.starts_with("0x") || hex.starts_with("0X"))
        hex.remove_prefix(2);
    if (hex.size() % 2 != 0)
        return std::nullopt;
    Bytes out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2) {
        const int hi = unhex_digit(hex[i]);
        const int lo = unhex_digit(hex[i + 1]);
        if (hi < 0 || lo < 0)
            return std::nullopt;
        out.push_back(static_cast<uint8_t>((hi << 4) | lo));
    }
    return out;
}

std::optional<Address> address_from_hex(std::string_view hex) {
    const auto bytes = from_hex(hex);
    if (!bytes || bytes->size() != 20)
        return std::nullopt;
    Address a;
    std::copy(bytes->begin(), bytes->end(), a.begin());
    return a;
}

std::optional<Hash32> hash_from_hex(std::string_view hex) {
    const auto bytes = from_hex(hex);
    if (!bytes || bytes->size() != 32)
        return std::nullopt;
    Hash32 h;
    std::copy(bytes->begin(), bytes->end(), h.begin());
    return h;
}

}  // namespace evmport
