// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace evmport {

using Bytes = std::basic_string<uint8_t>;
using ByteView = std::basic_string_view<uint8_t>;

using Address = std::array<uint8_t, 20>;
using Hash32 = std::array<uint8_t, 32>;

inline ByteView view(const Bytes& b) noexcept {
    return {b.data(), b.size()};
}

template <size_t N>
inline ByteView view(const std::array<uint8_t, N>& a) noexcept {
    return {a.data(), N};
}

std::string to_hex(ByteView data, bool with_prefix = true);
std::string to_hex(const Address& a, bool with_prefix = true);
std::string to_hex(const Hash32& h, bool with_prefix = true);

/// Parses hex with or without 0x prefix; empty payload yields empty bytes.
std::optional<Bytes> from_hex(std::string_view hex);

std::optional<Address> address_from_hex(std::string_view hex);
std::optional<Hash32> hash_from_hex(std::string_view hex);

}  // namespace evmport
