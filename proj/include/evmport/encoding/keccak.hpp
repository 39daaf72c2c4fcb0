// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/bytes.hpp>

namespace evmport {

/// Keccak-256 with the original multi-rate padding (0x01), as used by the
/// EVM; not the standardized SHA3-256 variant.
Hash32 keccak256(ByteView data);

inline Hash32 keccak256(const Bytes& data) {
    return keccak256(view(data));
}

}  // namespace evmport
