// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/codegen/deploy.hpp>

#include <evmport/codegen/assembler.hpp>
#include <evmport/evm/opcodes.hpp>
#include <evmport/trie/trie.hpp>

namespace evmport::codegen {

using evm::GasSchedule;

size_t byte_length(const Word& w) {
    return word_byte_length(w);
}

uint8_t push_opcode(size_t n_bytes) {
    if (n_bytes < 1 || n_bytes > 32)
        throw OutOfRange{};
    return static_cast<uint8_t>(evm::OP_PUSH1 + n_bytes - 1);
}

Bytes store_sequence(const StateSnapshot& snapshot) {
    Bytes out;
    for (const auto& [key, value] : snapshot.entries) {
        if (value == 0)
            throw trie::ZeroValueInSnapshot{};
        const Bytes value_bytes = word_to_min_bytes(value);
        const Bytes key_bytes = word_to_min_bytes(key);
        out.push_back(push_opcode(value_bytes.size()));
        out += value_bytes;
        out.push_back(push_opcode(key_bytes.size()));
        out += key_bytes;
        out.push_back(evm::OP_SSTORE);
    }
    return out;
}

namespace {

Bytes code_copy_epilogue(size_t runtime_size, size_t runtime_offset) {
    Assembler epilogue;
    epilogue.push(Word{static_cast<uint64_t>(runtime_size)});
    epilogue.op(evm::OP_DUP1);
    epilogue.push(Word{static_cast<uint64_t>(runtime_offset)});
    epilogue.push_exact(1, 0);
    epilogue.op(evm::OP_CODECOPY);
    epilogue.push_exact(1, 0);
    epilogue.op(evm::OP_RETURN);
    return epilogue.build();
}

}  // namespace

Bytes deploy_wrap(const StateSnapshot& snapshot, ByteView runtime_code) {
    Bytes code{kDeployPreamble, kDeployPreambleSize};
    code += store_sequence(snapshot);

    // The runtime offset depends on the epilogue size, whose PUSH widths
    // depend on the offset; iterate until the width assignment is stable.
    size_t offset = code.size();
    Bytes epilogue;
    for (;;) {
        epilogue = code_copy_epilogue(runtime_code.size(), offset);
        const size_t next = code.size() + epilogue.size();
        if (next == offset)
            break;
        offset = next;
    }
    code += epilogue;
    code.append(runtime_code);
    return code;
}

uint64_t estimate_deploy_gas(const StateSnapshot& snapshot, ByteView runtime_code,
                             const GasSchedule& schedule) {
    const Bytes deploy_code = deploy_wrap(snapshot, runtime_code);

    // Preamble: ten flat ops on the value-free path.
    uint64_t execution = 10 * schedule.base_op;
    // Two pushes per entry plus the store itself.
    execution +=
        static_cast<uint64_t>(snapshot.entries.size()) * (2 * schedule.base_op + schedule.sstore_set);
    // Epilogue: four pushes and DUP1, then CODECOPY with its word cost;
    // RETURN is free.
    execution += 5 * schedule.base_op;
    execution += schedule.base_op + schedule.codecopy_word * ((runtime_code.size() + 31) / 32);

    const uint64_t deposit = schedule.code_deposit_per_byte * runtime_code.size();
    return evm::intrinsic_gas(schedule, view(deploy_code)) + execution + deposit;
}

DeployArtifact generate_deploy_code(const StateSnapshot& snapshot, ByteView runtime_code,
                                    const GasSchedule& schedule) {
    DeployArtifact artifact;
    artifact.deploy_code = deploy_wrap(snapshot, runtime_code);
    artifact.expected_runtime = Bytes{runtime_code};
    artifact.expected_root = trie::secure_storage_root(snapshot);
    artifact.gas_estimate = estimate_deploy_gas(snapshot, runtime_code, schedule);
    if (artifact.gas_estimate > schedule.block_gas_limit)
        throw GasLimitExceeded{artifact.gas_estimate, schedule.block_gas_limit};
    return artifact;
}

}  // namespace evmport::codegen
