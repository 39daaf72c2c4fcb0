// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/bytes.hpp>

#include <boost/multiprecision/cpp_int.hpp>

namespace evmport {

/// Unsigned 256-bit machine word; all arithmetic wraps modulo 2^256.
using Word = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<
    256, 256, boost::multiprecision::unsigned_magnitude, boost::multiprecision::unchecked, void>>;

Hash32 word_to_bytes32(const Word& w);
Word word_from_bytes32(const Hash32& b);

/// Big-endian load with left zero-padding; at most 32 bytes.
Word word_from_bytes(ByteView data);

/// Minimal big-endian representation; zero yields one byte per the
/// deploy-code width rule.
size_t word_byte_length(const Word& w);

/// Minimal big-endian bytes; zero yields a single 0x00 byte.
Bytes word_to_min_bytes(const Word& w);

/// Big-endian with all leading zeros stripped; zero yields empty bytes
/// (RLP integer semantics).
Bytes word_to_stripped_bytes(const Word& w);

/// Low 20 bytes of the word.
Address word_to_address(const Word& w);
Word word_from_address(const Address& a);

/// True when the top 12 bytes are zero and the low 20 are not.
bool is_address_shaped(const Word& w);

std::string word_to_hex(const Word& w);
std::optional<Word> word_from_hex(std::string_view hex);

}  // namespace evmport
