// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/word.hpp>

namespace evmport {

Hash32 word_to_bytes32(const Word& w) {
    Hash32 out{};
    Word v = w;
    for (int i = 31; i >= 0; --i) {
        out[static_cast<size_t>(i)] = static_cast<uint8_t>(v & 0xff);
        v >>= 8;
    }
    return out;
}

Word word_from_bytes32(const Hash32& b) {
    return word_from_bytes(view(b));
}

Word word_from_bytes(ByteView data) {
    Word v = 0;
    const size_t n = data.size() > 32 ? 32 : data.size();
    for (size_t i = 0; i < n; ++i) {
        v <<= 8;
        v |= data[i];
    }
    return v;
}

size_t word_byte_length(const Word& w) {
    if (w == 0)
        return 1;
    size_t n = 0;
    Word v = w;
    while (v != 0) {
        v >>= 8;
        ++n;
    }
    return n;
}

Bytes word_to_min_bytes(const Word& w) {
    const size_t n = word_byte_length(w);
    Bytes out(n, 0);
    Word v = w;
    for (size_t i = n; i-- > 0;) {
        out[i] = static_cast<uint8_t>(v & 0xff);
        v >>= 8;
    }
    return out;
}

Bytes word_to_stripped_bytes(const Word& w) {
    if (w == 0)
        return {};
    return word_to_min_bytes(w);
}

Address word_to_address(const Word& w) {
    const Hash32 b = word_to_bytes32(w);
    Address a;
    std::copy(b.begin() + 12, b.end(), a.begin());
    return a;
}

Word word_from_address(const Address& a) {
    return word_from_bytes(view(a));
}

bool is_address_shaped(const Word& w) {
    return w != 0 && (w >> 160) == 0;
}

std::string word_to_hex(const Word& w) {
    return to_hex(view(word_to_bytes32(w)));
}

std::optional<Word> word_from_hex(std::string_view hex) {
    if (hex.starts_with("0x") || hex.starts_with("0X"))
        hex.remove_prefix(2);
    if (hex.empty() || hex.size() > 64)
        return std::nullopt;
    std::string padded(hex.size() % 2, '0');
    padded += hex;
    const auto bytes = from_hex(padded);
    if (!bytes)
        return std::nullopt;
    return word_from_bytes(view(*bytes));
}

}  // namespace evmport
