// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/bytes.hpp>

#include <set>
#include <vector>

namespace evmport::evm {

enum Opcode : uint8_t {
    OP_STOP = 0x00,
    OP_ADD = 0x01,
    OP_MUL = 0x02,
    OP_SUB = 0x03,
    OP_DIV = 0x04,
    OP_LT = 0x10,
    OP_GT = 0x11,
    OP_EQ = 0x14,
    OP_ISZERO = 0x15,
    OP_AND = 0x16,
    OP_OR = 0x17,
    OP_NOT = 0x19,
    OP_BYTE = 0x1a,
    OP_SHL = 0x1b,
    OP_SHR = 0x1c,
    OP_SHA3 = 0x20,
    OP_CALLER = 0x33,
    OP_CALLVALUE = 0x34,
    OP_CALLDATALOAD = 0x35,
    OP_CALLDATASIZE = 0x36,
    OP_CALLDATACOPY = 0x37,
    OP_CODESIZE = 0x38,
    OP_CODECOPY = 0x39,
    OP_EXTCODESIZE = 0x3b,
    OP_EXTCODECOPY = 0x3c,
    OP_RETURNDATASIZE = 0x3d,
    OP_RETURNDATACOPY = 0x3e,
    OP_POP = 0x50,
    OP_MLOAD = 0x51,
    OP_MSTORE = 0x52,
    OP_SLOAD = 0x54,
    OP_SSTORE = 0x55,
    OP_JUMP = 0x56,
    OP_JUMPI = 0x57,
    OP_PC = 0x58,
    OP_JUMPDEST = 0x5b,
    OP_PUSH1 = 0x60,
    OP_PUSH2 = 0x61,
    OP_PUSH4 = 0x63,
    OP_PUSH20 = 0x73,
    OP_PUSH32 = 0x7f,
    OP_DUP1 = 0x80,
    OP_DUP2 = 0x81,
    OP_DUP16 = 0x8f,
    OP_SWAP1 = 0x90,
    OP_SWAP16 = 0x9f,
    OP_CALL = 0xf1,
    OP_RETURN = 0xf3,
    OP_DELEGATECALL = 0xf4,
    OP_REVERT = 0xfd,
    OP_SELFDESTRUCT = 0xff,
};

constexpr bool is_push(uint8_t op) noexcept {
    return op >= OP_PUSH1 && op <= OP_PUSH32;
}

/// Immediate bytes following the opcode (nonzero only for PUSH).
constexpr size_t immediate_size(uint8_t op) noexcept {
    return is_push(op) ? op - OP_PUSH1 + 1u : 0u;
}

/// Valid JUMPDEST offsets; bytes inside PUSH immediates never qualify.
std::vector<bool> jumpdest_map(ByteView code);

/// The exact opcode set this interpreter implements.
const std::set<uint8_t>& supported_opcodes();

}  // namespace evmport::evm
