// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/evm/gas.hpp>
#include <evmport/evm/opcodes.hpp>
#include <evmport/evm/trace.hpp>
#include <evmport/evm/world.hpp>

namespace evmport::evm {

enum class VmStatus {
    Success,
    Revert,
    OutOfGas,
    StackUnderflow,
    StackOverflow,
    InvalidOpcode,
    BadJumpDestination,
    ReturnDataOutOfBounds,
    CallDepthExceeded,
    CreateCollision,
};

const char* to_string(VmStatus status) noexcept;

inline bool is_success(VmStatus status) noexcept {
    return status == VmStatus::Success;
}

struct MessageResult {
    VmStatus status = VmStatus::Success;
    Bytes return_data;          // RETURN payload, or REVERT payload
    uint64_t gas_used = 0;      // execution gas; intrinsic gas is the caller's business
    TraceRecord trace;          // empty unless status == Success
    WorldState world;           // post-state on success, the input otherwise
    uint8_t invalid_opcode = 0; // set for VmStatus::InvalidOpcode
};

struct DeployResult {
    VmStatus status = VmStatus::Success;
    Address created{};
    Bytes runtime_code;
    uint64_t gas_used = 0;
    TraceRecord trace;
    WorldState world;
};

/// Runs a message call against `to`. Calls to code-less accounts succeed
/// as no-ops. The returned world equals the input unless the call
/// succeeded; OutOfGas consumes all provided gas.
MessageResult execute_message(const WorldState& world, const Address& from, const Address& to,
                              ByteView calldata, uint64_t gas, const GasSchedule& schedule);

/// Runs `deploy_code` as an init frame: the new account's address derives
/// from (from, nonce), constructor storage writes land in it, and the
/// RETURN payload becomes its code (charged per byte on deposit).
DeployResult execute_deploy(const WorldState& world, const Address& from, ByteView deploy_code,
                            uint64_t gas, const GasSchedule& schedule);

}  // namespace evmport::evm
