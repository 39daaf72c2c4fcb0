// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/bytes.hpp>

#include <cstdint>

namespace evmport::evm {

/// Simplified gas model: the constants that matter for sizing migrations,
/// plus a flat per-operation cost for everything else. Not a mainnet
/// schedule.
struct GasSchedule {
    uint64_t sstore_set = 20'000;    // nonzero value into an empty slot
    uint64_t sstore_reset = 5'000;   // overwrite or delete
    uint64_t base_op = 3;            // push/dup/swap/arithmetic and all unlisted ops
    uint64_t codecopy_word = 3;      // per 32-byte word moved by copy ops
    uint64_t tx_base = 21'000;
    uint64_t tx_data_zero_byte = 4;
    uint64_t tx_data_nonzero_byte = 68;
    uint64_t code_deposit_per_byte = 200;
    uint64_t call_base = 700;
    uint64_t block_gas_limit = 8'000'000;
};

/// Transaction-intrinsic gas: tx_base plus per-byte calldata cost.
inline uint64_t intrinsic_gas(const GasSchedule& schedule, ByteView data) {
    uint64_t gas = schedule.tx_base;
    for (uint8_t b : data)
        gas += b == 0 ? schedule.tx_data_zero_byte : schedule.tx_data_nonzero_byte;
    return gas;
}

inline uint64_t calldata_gas(const GasSchedule& schedule, ByteView data) {
    return intrinsic_gas(schedule, data) - schedule.tx_base;
}

}  // namespace evmport::evm
