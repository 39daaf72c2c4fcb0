// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/create_address.hpp>
#include <evmport/evm/gas.hpp>
#include <evmport/state.hpp>

#include <stdexcept>

namespace evmport::codegen {

struct OutOfRange : std::invalid_argument {
    OutOfRange() : std::invalid_argument("push width must be between 1 and 32 bytes") {}
};

/// Raised when a single-transaction deploy cannot fit the block gas limit;
/// the caller should switch to the proxy strategy.
struct GasLimitExceeded : std::runtime_error {
    uint64_t estimate;
    uint64_t limit;
    GasLimitExceeded(uint64_t estimate_, uint64_t limit_)
        : std::runtime_error("deploy gas estimate " + std::to_string(estimate_) +
                             " exceeds block gas limit " + std::to_string(limit_)),
          estimate(estimate_),
          limit(limit_) {}
};

/// The fixed constructor preamble every generated deploy code starts with
/// (memory pointer setup and the non-payable guard).
inline constexpr uint8_t kDeployPreamble[] = {0x60, 0x80, 0x60, 0x40, 0x52, 0x34,
                                              0x80, 0x15, 0x61, 0x00, 0x10, 0x57,
                                              0x60, 0x00, 0x80, 0xfd, 0x5b, 0x50};
inline constexpr size_t kDeployPreambleSize = sizeof(kDeployPreamble);

struct DeployArtifact {
    Bytes deploy_code;
    Bytes expected_runtime;
    Hash32 expected_root;
    uint64_t gas_estimate = 0;
};

/// Minimal big-endian byte count of a word; zero occupies one pushed byte.
size_t byte_length(const Word& w);

/// PUSH opcode for an n-byte immediate: PUSH1's byte plus (n - 1).
uint8_t push_opcode(size_t n_bytes);

/// One PUSH value / PUSH key / SSTORE triple per entry, ascending by key,
/// value pushed first so the key sits on top of the stack at SSTORE.
Bytes store_sequence(const StateSnapshot& snapshot);

/// preamble | store sequence | code-copy epilogue | runtime. No gas check.
Bytes deploy_wrap(const StateSnapshot& snapshot, ByteView runtime_code);

/// Exact transaction gas for sending and executing the generated deploy
/// code under this gas model (intrinsic + execution + code deposit).
uint64_t estimate_deploy_gas(const StateSnapshot& snapshot, ByteView runtime_code,
                             const evm::GasSchedule& schedule);

/// Single-transaction deploy artifact; throws GasLimitExceeded when the
/// estimate does not fit the block gas limit.
DeployArtifact generate_deploy_code(const StateSnapshot& snapshot, ByteView runtime_code,
                                    const evm::GasSchedule& schedule);

/// Address of the contract created by `sender` at `nonce`.
inline Address precompute_address(const Address& sender, uint64_t nonce) {
    return create_address(sender, nonce);
}

}  // namespace evmport::codegen
