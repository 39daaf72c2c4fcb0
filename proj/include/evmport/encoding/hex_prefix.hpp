// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/bytes.hpp>

#include <vector>

namespace evmport {

/// Trie path as a sequence of 4-bit symbols plus the leaf flag that
/// hex-prefix encoding folds into its first byte.
struct Nibbles {
    std::vector<uint8_t> values;  // each < 16
    bool leaf = false;

    bool operator==(const Nibbles&) const = default;
};

Nibbles bytes_to_nibbles(ByteView key, bool leaf = false);

/// Yellow-Paper hex-prefix encoding: bit 5 of the first byte carries the
/// leaf flag, bit 4 the odd-length flag; odd paths pack their first nibble
/// into the prefix byte.
Bytes hex_prefix(const Nibbles& nibbles);

/// Inverse of hex_prefix; rejects empty input and malformed flag bits.
Nibbles hex_prefix_decode(ByteView data);

}  // namespace evmport
