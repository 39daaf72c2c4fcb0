// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/samples.hpp>

#include <evmport/codegen/assembler.hpp>

namespace evmport::samples {

using codegen::Assembler;
using namespace evm;  // opcode names

namespace {

void emit_selector_load(Assembler& a) {
    a.push_exact(1, 0).op(OP_CALLDATALOAD).push_exact(1, 0xe0).op(OP_SHR);
}

void emit_dispatch_case(Assembler& a, uint32_t selector, const std::string& label) {
    a.op(OP_DUP1).push(Word{selector}).op(OP_EQ).push_label(label).op(OP_JUMPI);
}

void emit_fallback_revert(Assembler& a) {
    a.push_exact(1, 0).push_exact(1, 0).op(OP_REVERT);
}

void emit_return_slot0(Assembler& a) {
    a.push_exact(1, 0).op(OP_SLOAD).push_exact(1, 0).op(OP_MSTORE);
    a.push_exact(1, 0x20).push_exact(1, 0).op(OP_RETURN);
}

}  // namespace

Bytes counter_runtime() {
    Assembler a;
    emit_selector_load(a);
    emit_dispatch_case(a, kIncrementSelector, "inc");
    emit_dispatch_case(a, kGetSelector, "get");
    emit_fallback_revert(a);
    a.jumpdest("inc").op(OP_POP);
    a.push_exact(1, 1).push_exact(1, 0).op(OP_SLOAD).op(OP_ADD);
    a.push_exact(1, 0).op(OP_SSTORE).op(OP_STOP);
    a.jumpdest("get").op(OP_POP);
    emit_return_slot0(a);
    return a.build();
}

Bytes referenced_runtime() {
    Assembler a;
    emit_selector_load(a);
    emit_dispatch_case(a, kSetVarSelector, "set");
    emit_dispatch_case(a, kGetVarSelector, "get");
    emit_fallback_revert(a);
    a.jumpdest("set").op(OP_POP);
    a.push_exact(1, 4).op(OP_CALLDATALOAD).push_exact(1, 0).op(OP_SSTORE).op(OP_STOP);
    a.jumpdest("get").op(OP_POP);
    emit_return_slot0(a);
    return a.build();
}

Bytes simple_runtime() {
    Assembler a;
    emit_selector_load(a);
    emit_dispatch_case(a, kSetASelector, "seta");
    emit_dispatch_case(a, kSetBSelector, "setb");
    emit_dispatch_case(a, kSetRefVarSelector, "setr");
    emit_fallback_revert(a);

    a.jumpdest("seta").op(OP_POP);
    a.push_exact(1, 4).op(OP_CALLDATALOAD).push_exact(1, 0).op(OP_SSTORE).op(OP_STOP);

    // setB(key, val): mapping slot = keccak256(key ++ 1)
    a.jumpdest("setb").op(OP_POP);
    a.push_exact(1, 4).op(OP_CALLDATALOAD).push_exact(1, 0).op(OP_MSTORE);
    a.push_exact(1, 1).push_exact(1, 0x20).op(OP_MSTORE);
    a.push_exact(1, 0x24).op(OP_CALLDATALOAD);
    a.push_exact(1, 0x40).push_exact(1, 0).op(OP_SHA3);
    a.op(OP_SSTORE).op(OP_STOP);

    // setRefVar(v): call setVar(v) on the contract referenced in slot 2.
    a.jumpdest("setr").op(OP_POP);
    a.push(Word{kSetVarSelector}).push_exact(1, 0xe0).op(OP_SHL).push_exact(1, 0).op(OP_MSTORE);
    a.push_exact(1, 4).op(OP_CALLDATALOAD).push_exact(1, 4).op(OP_MSTORE);
    a.push_exact(1, 0).push_exact(1, 0);      // retLength, retOffset
    a.push_exact(1, 0x24).push_exact(1, 0);   // argsLength, argsOffset
    a.push_exact(1, 0);                       // value
    a.push_exact(1, 2).op(OP_SLOAD);          // to
    a.push(Word{0xffffffff}).op(OP_CALL);
    a.push_label("ok").op(OP_JUMPI);
    emit_fallback_revert(a);
    a.jumpdest("ok").op(OP_STOP);
    return a.build();
}

Bytes simple_deploy(const Address& referenced) {
    const Bytes runtime = simple_runtime();
    Assembler a;
    // a = 42
    a.push_exact(1, 42).push_exact(1, 0).op(OP_SSTORE);
    // b[13] = 21 at keccak256(13 ++ 1), derived on the fly like compiled
    // constructor code would.
    a.push_exact(1, 13).push_exact(1, 0).op(OP_MSTORE);
    a.push_exact(1, 1).push_exact(1, 0x20).op(OP_MSTORE);
    a.push_exact(1, 21);
    a.push_exact(1, 0x40).push_exact(1, 0).op(OP_SHA3);
    a.op(OP_SSTORE);
    // referencedContract = <address>
    a.push_address(referenced).push_exact(1, 2).op(OP_SSTORE);
    // copy the runtime and return it
    a.push(Word{static_cast<uint64_t>(runtime.size())});
    a.op(OP_DUP1).push_label("runtime").push_exact(1, 0).op(OP_CODECOPY);
    a.push_exact(1, 0).op(OP_RETURN);
    a.label("runtime").raw(view(runtime));
    return a.build();
}

Bytes static_caller_runtime(const Address& library) {
    Assembler a;
    a.op(OP_CALLDATASIZE).push_exact(1, 0).push_exact(1, 0).op(OP_CALLDATACOPY);
    a.push_exact(1, 0).push_exact(1, 0);
    a.op(OP_CALLDATASIZE).push_exact(1, 0);
    a.push_exact(1, 0);
    a.push_address(library).push(Word{0xffffffff}).op(OP_CALL);
    a.op(OP_RETURNDATASIZE).push_exact(1, 0).push_exact(1, 0).op(OP_RETURNDATACOPY);
    a.push_label("ok").op(OP_JUMPI);
    a.op(OP_RETURNDATASIZE).push_exact(1, 0).op(OP_REVERT);
    a.jumpdest("ok");
    a.op(OP_RETURNDATASIZE).push_exact(1, 0).op(OP_RETURN);
    return a.build();
}

Bytes encode_call(uint32_t selector, std::initializer_list<Word> args) {
    Bytes out;
    const Hash32 sel = word_to_bytes32(Word{selector});
    out.append(sel.data() + 28, 4);
    for (const Word& arg : args) {
        const Hash32 bytes = word_to_bytes32(arg);
        out.append(bytes.data(), 32);
    }
    return out;
}

}  // namespace evmport::samples
