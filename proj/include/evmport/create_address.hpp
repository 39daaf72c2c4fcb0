// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/bytes.hpp>
#include <evmport/encoding/keccak.hpp>
#include <evmport/encoding/rlp.hpp>

namespace evmport {

/// Contract address created by `sender` at `nonce`: the low 20 bytes of
/// keccak256(rlp([sender, nonce])), nonce as a minimal integer.
inline Address create_address(const Address& sender, uint64_t nonce) {
    const Bytes enc = rlp::encode(
        rlp::Item::list({rlp::Item::string(view(sender)), rlp::Item::integer(nonce)}));
    const Hash32 digest = keccak256(enc);
    Address out;
    std::copy(digest.begin() + 12, digest.end(), out.begin());
    return out;
}

}  // namespace evmport
