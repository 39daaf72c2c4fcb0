// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/codegen/deploy.hpp>

#include <vector>

namespace evmport::codegen {

struct ChunkingImpossible : std::runtime_error {
    ChunkingImpossible()
        : std::runtime_error("a single key/value pair exceeds the block gas limit") {}
};

/// Four-byte tag selecting the proxy's guarded batch-store entry; the
/// payload is count-prefixed raw (key, value) 32-byte pairs, no ABI
/// encoding.
inline constexpr uint32_t kStoreMagic = 0x564d4947;

/// Selector of the initialization contract's finalize entry
/// (keccak256("finalize()")[0:4]).
inline constexpr uint32_t kFinalizeSelector = 0x4bb278f3;

struct ChunkPlan {
    std::vector<std::vector<std::pair<Word, Word>>> chunks;
    uint64_t per_chunk_gas = 0;  // worst-case estimate over all chunks
    uint64_t gas_limit = 0;
};

/// Upper bound on the transaction gas for a load of `pairs` entries
/// (intrinsic cost, both dispatch layers and the stores).
uint64_t estimate_load_gas(size_t pairs, const evm::GasSchedule& schedule);

/// Greedy fill in ascending key order so that every load transaction's
/// estimate stays within the block gas limit.
ChunkPlan chunk_state(const StateSnapshot& snapshot, const evm::GasSchedule& schedule);

struct ProxyArtifactSet {
    Bytes logic_deploy;
    Bytes init_deploy;
    Bytes proxy_deploy;
    std::vector<Bytes> load_transactions;  // calldata payloads addressed to init
    Bytes finalize_transaction;            // calldata payload addressed to init
    struct Predicted {
        Address logic{};
        Address init{};
        Address proxy{};
    } predicted_addresses;
    ChunkPlan chunk_plan;
};

/// Proxy runtime: a batch-store entry accepting calldata only from the
/// initialization contract, and a fallback that delegatecalls the logic
/// contract, forwarding calldata and return data unchanged.
Bytes proxy_runtime(const Address& init, const Address& logic);

/// Initialization runtime: relays load payloads to the proxy and
/// self-destructs on finalize; only the deployer may drive it.
Bytes init_runtime(const Address& proxy, const Address& deployer);

/// The logic/initialization/proxy artifact triple with chunked state
/// loading. Addresses are precomputed from (deployer, nonce..nonce+2) and
/// embedded as constants; deployment order is logic, init, proxy.
ProxyArtifactSet generate_proxy_set(const StateSnapshot& snapshot, ByteView logic_runtime,
                                    const Address& deployer, uint64_t deployer_nonce,
                                    const evm::GasSchedule& schedule);

}  // namespace evmport::codegen
