// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/reconstruct/replay.hpp>

#include <evmport/trie/trie.hpp>

#include <algorithm>

namespace evmport::reconstruct {

using evm::GasSchedule;
using evm::VmStatus;
using evm::WorldState;

namespace {

TraceDiff diff_for(const evm::TraceRecord& trace, const Address& contract) {
    TraceDiff diff;
    for (const evm::StorageWrite& write : trace.storage_writes(contract))
        diff.writes.push_back({write.key, write.value});
    return diff;
}

}  // namespace

ReplayResult replay_journal(const TransactionJournal& journal, const GasSchedule& schedule) {
    if (journal.empty() || journal.front().to.has_value())
        throw MissingDeployment{};

    ReplayResult out;
    WorldState world;

    Address contract{};
    for (size_t i = 0; i < journal.size(); ++i) {
        const JournalEntry& entry = journal[i];
        // The journal nonce is authoritative so that deployments land at
        // their source-chain addresses.
        world.get_or_create(entry.from).nonce = entry.nonce;

        const uint64_t intrinsic = evm::intrinsic_gas(schedule, view(entry.data));
        const uint64_t budget =
            std::min(entry.gas, schedule.block_gas_limit);
        const uint64_t execution_gas = budget > intrinsic ? budget - intrinsic : 0;

        VmStatus status;
        TraceDiff diff;
        if (!entry.to) {
            const auto res =
                evm::execute_deploy(world, entry.from, view(entry.data), execution_gas, schedule);
            status = res.status;
            if (res.status == VmStatus::Success) {
                world = res.world;
                diff = diff_for(res.trace, i == 0 ? res.created : contract);
            }
            if (i == 0) {
                if (res.status != VmStatus::Success)
                    throw MissingDeployment{};
                contract = res.created;
                out.snapshot.contract = contract;
            }
        } else {
            const auto res = evm::execute_message(world, entry.from, *entry.to, view(entry.data),
                                                  execution_gas, schedule);
            status = res.status;
            if (res.status == VmStatus::Success) {
                world = res.world;
                diff = diff_for(res.trace, contract);
            }
            world.get_or_create(entry.from).nonce = entry.nonce + 1;
        }

        if (status != VmStatus::Success) {
            if (entry.status.value_or(false))
                throw ReplayDivergence{i, status};
            out.skipped.push_back(i);
        }
        out.diffs.push_back(std::move(diff));
        out.snapshot.block_height = entry.block;
    }

    for (const TraceDiff& diff : out.diffs)
        for (const TraceDiff::Write& write : diff.writes)
            snapshot_assign(out.snapshot.entries, write.key, write.value);

    out.runtime_code = world.code_at(contract);
    out.world = std::move(world);
    return out;
}

StateSnapshot apply_diffs(StateSnapshot base, const std::vector<TraceDiff>& diffs) {
    for (const TraceDiff& diff : diffs)
        for (const TraceDiff::Write& write : diff.writes)
            snapshot_assign(base.entries, write.key, write.value);
    return base;
}

Hash32 snapshot_root(const StateSnapshot& snapshot) {
    return trie::secure_storage_root(snapshot);
}

}  // namespace evmport::reconstruct
