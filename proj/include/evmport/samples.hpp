// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/bytes.hpp>
#include <evmport/word.hpp>

#include <initializer_list>

namespace evmport::samples {

// Hand-assembled demo contracts used by the CLI demo command and the test
// suites. Selectors are the first four bytes of the keccak256 of the
// signature, as a compiler would emit them.

inline constexpr uint32_t kIncrementSelector = 0xd09de08a;  // increment()
inline constexpr uint32_t kGetSelector = 0x6d4ce63c;        // get()
inline constexpr uint32_t kSetVarSelector = 0x3a885d79;     // setVar(uint256)
inline constexpr uint32_t kGetVarSelector = 0x477a5c98;     // getVar()
inline constexpr uint32_t kSetASelector = 0xee919d50;       // setA(uint256)
inline constexpr uint32_t kSetBSelector = 0xf3180546;       // setB(uint256,uint256)
inline constexpr uint32_t kSetRefVarSelector = 0x3a2638bc;  // setRefVar(uint256)

/// Slot-0 counter: increment() adds one, get() returns the value.
Bytes counter_runtime();

/// Standalone dependency: setVar(uint256) writes slot 0, getVar() reads it.
Bytes referenced_runtime();

/// Three-variable contract: slot 0 scalar, slot 1 mapping, slot 2 a
/// dynamic reference to another contract. setRefVar relays to the
/// referenced contract's setVar.
Bytes simple_runtime();

/// Deploy code for the three-variable contract: the constructor sets
/// slot 0 = 42, mapping entry [13] = 21 (slot derived via SHA3 at run
/// time) and slot 2 = `referenced`.
Bytes simple_deploy(const Address& referenced);

/// Library-style static reference: forwards every call to a hardcoded
/// address and mirrors its result.
Bytes static_caller_runtime(const Address& library);

/// selector | 32-byte big-endian args
Bytes encode_call(uint32_t selector, std::initializer_list<Word> args = {});

}  // namespace evmport::samples
