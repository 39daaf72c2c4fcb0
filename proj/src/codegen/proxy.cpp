// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/codegen/proxy.hpp>

#include <evmport/codegen/assembler.hpp>

namespace evmport::codegen {

using evm::GasSchedule;
using namespace evm;  // opcode names

namespace {

/// Emits "selector = calldata[0..4]" and leaves it on the stack.
void emit_selector_load(Assembler& a) {
    a.push_exact(1, 0).op(OP_CALLDATALOAD).push_exact(1, 0xe0).op(OP_SHR);
}

constexpr uint64_t kForwardAllGas = 0xffffffff;

}  // namespace

Bytes proxy_runtime(const Address& init, const Address& logic) {
    Assembler a;
    emit_selector_load(a);
    a.push(Word{kStoreMagic}).op(OP_EQ).push_label("store").op(OP_JUMPI);

    // Fallback: delegatecall the logic contract with the full calldata and
    // surface its return data verbatim.
    a.op(OP_CALLDATASIZE).push_exact(1, 0).push_exact(1, 0).op(OP_CALLDATACOPY);
    a.push_exact(1, 0).push_exact(1, 0);          // retLength, retOffset
    a.op(OP_CALLDATASIZE).push_exact(1, 0);       // argsLength, argsOffset
    a.push_address(logic).push(Word{kForwardAllGas});
    a.op(OP_DELEGATECALL);
    a.op(OP_RETURNDATASIZE).push_exact(1, 0).push_exact(1, 0).op(OP_RETURNDATACOPY);
    a.push_label("fwd_ok").op(OP_JUMPI);
    a.op(OP_RETURNDATASIZE).push_exact(1, 0).op(OP_REVERT);
    a.jumpdest("fwd_ok");
    a.op(OP_RETURNDATASIZE).push_exact(1, 0).op(OP_RETURN);

    // Guarded batch store: only the initialization contract may call.
    a.jumpdest("store");
    a.op(OP_CALLER).push_address(init).op(OP_EQ).push_label("auth").op(OP_JUMPI);
    a.push_exact(1, 0).push_exact(1, 0).op(OP_REVERT);
    a.jumpdest("auth");
    a.push_exact(1, 4).op(OP_CALLDATALOAD);  // n
    a.push_exact(1, 0);                      // i
    a.jumpdest("loop");
    a.op(OP_DUP2).op(OP_DUP2).op(OP_LT).op(OP_ISZERO).push_label("done").op(OP_JUMPI);
    a.op(OP_DUP1).push_exact(1, 0x40).op(OP_MUL).push_exact(1, 0x24).op(OP_ADD);
    a.op(OP_DUP1).op(OP_CALLDATALOAD);
    a.op(OP_SWAP1).push_exact(1, 0x20).op(OP_ADD).op(OP_CALLDATALOAD);
    a.op(OP_SWAP1).op(OP_SSTORE);
    a.push_exact(1, 1).op(OP_ADD);
    a.push_label("loop").op(OP_JUMP);
    a.jumpdest("done");
    a.op(OP_POP).op(OP_POP).op(OP_STOP);
    return a.build();
}

Bytes init_runtime(const Address& proxy, const Address& deployer) {
    Assembler a;
    a.op(OP_CALLER).push_address(deployer).op(OP_EQ).push_label("auth").op(OP_JUMPI);
    a.push_exact(1, 0).push_exact(1, 0).op(OP_REVERT);
    a.jumpdest("auth");
    emit_selector_load(a);
    a.push(Word{kFinalizeSelector}).op(OP_EQ).push_label("fin").op(OP_JUMPI);

    // Relay the load payload to the proxy.
    a.op(OP_CALLDATASIZE).push_exact(1, 0).push_exact(1, 0).op(OP_CALLDATACOPY);
    a.push_exact(1, 0).push_exact(1, 0);      // retLength, retOffset
    a.op(OP_CALLDATASIZE).push_exact(1, 0);   // argsLength, argsOffset
    a.push_exact(1, 0);                       // value
    a.push_address(proxy).push(Word{kForwardAllGas});
    a.op(OP_CALL);
    a.push_label("relay_ok").op(OP_JUMPI);
    a.push_exact(1, 0).push_exact(1, 0).op(OP_REVERT);
    a.jumpdest("relay_ok");
    a.op(OP_STOP);

    a.jumpdest("fin");
    a.op(OP_CALLER).op(OP_SELFDESTRUCT);
    return a.build();
}

uint64_t estimate_load_gas(size_t pairs, const GasSchedule& schedule) {
    const uint64_t calldata_bytes = 4 + 32 + 64 * static_cast<uint64_t>(pairs);
    // Worst case: every calldata byte nonzero.
    const uint64_t intrinsic = schedule.tx_base + calldata_bytes * schedule.tx_data_nonzero_byte;

    // Init dispatch, relay copy and CALL; proxy dispatch and loop. The op
    // counts carry headroom over the assembled templates.
    const uint64_t relay_copy_words = (calldata_bytes + 31) / 32;
    const uint64_t fixed_ops = 60;
    const uint64_t per_pair_ops = 30;
    const uint64_t fixed = fixed_ops * schedule.base_op + schedule.call_base +
                           relay_copy_words * schedule.codecopy_word;
    const uint64_t per_pair =
        static_cast<uint64_t>(pairs) * (per_pair_ops * schedule.base_op + schedule.sstore_set);
    return intrinsic + fixed + per_pair;
}

ChunkPlan chunk_state(const StateSnapshot& snapshot, const GasSchedule& schedule) {
    ChunkPlan plan;
    plan.gas_limit = schedule.block_gas_limit;
    if (snapshot.entries.empty())
        return plan;
    if (estimate_load_gas(1, schedule) > schedule.block_gas_limit)
        throw ChunkingImpossible{};

    // Largest n with estimate(n) <= limit; the estimate is affine in n.
    size_t capacity = 1;
    while (estimate_load_gas(capacity + 1, schedule) <= schedule.block_gas_limit)
        ++capacity;

    std::vector<std::pair<Word, Word>> chunk;
    for (const auto& [key, value] : snapshot.entries) {
        chunk.emplace_back(key, value);
        if (chunk.size() == capacity) {
            plan.chunks.push_back(std::move(chunk));
            chunk.clear();
        }
    }
    if (!chunk.empty())
        plan.chunks.push_back(std::move(chunk));

    for (const auto& c : plan.chunks)
        plan.per_chunk_gas = std::max(plan.per_chunk_gas, estimate_load_gas(c.size(), schedule));
    return plan;
}

namespace {

Bytes load_payload(const std::vector<std::pair<Word, Word>>& chunk) {
    Bytes out;
    const Hash32 magic = word_to_bytes32(Word{kStoreMagic});
    out.append(magic.data() + 28, 4);
    const Hash32 count = word_to_bytes32(Word{static_cast<uint64_t>(chunk.size())});
    out.append(count.data(), 32);
    for (const auto& [key, value] : chunk) {
        const Hash32 k = word_to_bytes32(key);
        const Hash32 v = word_to_bytes32(value);
        out.append(k.data(), 32);
        out.append(v.data(), 32);
    }
    return out;
}

}  // namespace

ProxyArtifactSet generate_proxy_set(const StateSnapshot& snapshot, ByteView logic_runtime,
                                    const Address& deployer, uint64_t deployer_nonce,
                                    const GasSchedule& schedule) {
    ProxyArtifactSet set;
    set.predicted_addresses.logic = precompute_address(deployer, deployer_nonce);
    set.predicted_addresses.init = precompute_address(deployer, deployer_nonce + 1);
    set.predicted_addresses.proxy = precompute_address(deployer, deployer_nonce + 2);

    const StateSnapshot empty{};
    set.logic_deploy = generate_deploy_code(empty, logic_runtime, schedule).deploy_code;
    set.init_deploy =
        generate_deploy_code(
            empty, view(init_runtime(set.predicted_addresses.proxy, deployer)), schedule)
            .deploy_code;
    set.proxy_deploy =
        generate_deploy_code(
            empty,
            view(proxy_runtime(set.predicted_addresses.init, set.predicted_addresses.logic)),
            schedule)
            .deploy_code;

    set.chunk_plan = chunk_state(snapshot, schedule);
    for (const auto& chunk : set.chunk_plan.chunks)
        set.load_transactions.push_back(load_payload(chunk));

    const Hash32 fin = word_to_bytes32(Word{kFinalizeSelector});
    set.finalize_transaction.append(fin.data() + 28, 4);
    return set;
}

}  // namespace evmport::codegen
