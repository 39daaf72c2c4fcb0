// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/encoding/hex_prefix.hpp>

#include <cassert>
#include <stdexcept>

namespace evmport {

Nibbles bytes_to_nibbles(ByteView key, bool leaf) {
    Nibbles out;
    out.leaf = leaf;
    out.values.reserve(key.size() * 2);
    for (uint8_t b : key) {
        out.values.push_back(b >> 4);
        out.values.push_back(b & 0x0f);
    }
    return out;
}

Bytes hex_prefix(const Nibbles& nibbles) {
    const bool odd = nibbles.values.size() % 2 != 0;
    const uint8_t flag = static_cast<uint8_t>((nibbles.leaf ? 2 : 0) + (odd ? 1 : 0));
    Bytes out;
    out.reserve(1 + nibbles.values.size() / 2);
    size_t i = 0;
    if (odd) {
        assert(nibbles.values[0] < 16);
        out.push_back(static_cast<uint8_t>((flag << 4) | nibbles.values[0]));
        i = 1;
    } else {
        out.push_back(static_cast<uint8_t>(flag << 4));
    }
    // An even number of nibbles remains past this point.
    for (; i < nibbles.values.size(); i += 2) {
        assert(nibbles.values[i] < 16 && nibbles.values[i + 1] < 16);
        out.push_back(static_cast<uint8_t>((nibbles.values[i] << 4) | nibbles.values[i + 1]));
    }
    return out;
}

Nibbles hex_prefix_decode(ByteView data) {
    if (data.empty())
        throw std::invalid_argument{"hex-prefix: empty input"};
    const uint8_t flag = data[0] >> 4;
    if (flag > 3)
        throw std::invalid_argument{"hex-prefix: invalid flag nibble"};
    Nibbles out;
    out.leaf = (flag & 2) != 0;
    const bool odd = (flag & 1) != 0;
    if (odd)
        out.values.push_back(data[0] & 0x0f);
    else if ((data[0] & 0x0f) != 0)
        throw std::invalid_argument{"hex-prefix: nonzero padding nibble"};
    for (size_t i = 1; i < data.size(); ++i) {
        out.values.push_back(data[i] >> 4);
        out.values.push_back(data[i] & 0x0f);
    }
    return out;
}

}  // namespace evmport
