// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/evm/interpreter.hpp>
#include <evmport/reconstruct/journal.hpp>
#include <evmport/state.hpp>

namespace evmport::reconstruct {

struct MissingDeployment : std::runtime_error {
    MissingDeployment()
        : std::runtime_error("journal does not begin with a successful deployment") {}
};

/// A journal entry the source marked successful failed during replay.
struct ReplayDivergence : std::runtime_error {
    explicit ReplayDivergence(size_t index, evm::VmStatus status)
        : std::runtime_error("replay diverged at journal entry " + std::to_string(index) + ": " +
                             evm::to_string(status)) {}
};

/// Per-transaction storage writes in execution order, pre-hash keys.
struct TraceDiff {
    struct Write {
        Word key;
        Word value;

        bool operator==(const Write&) const = default;
    };
    std::vector<Write> writes;

    bool operator==(const TraceDiff&) const = default;
};

struct ReplayResult {
    StateSnapshot snapshot;
    Bytes runtime_code;
    evm::WorldState world;              // final replay world, for cross-checks
    std::vector<TraceDiff> diffs;       // per journal entry, failed entries empty
    std::vector<size_t> skipped;        // journal indices that failed and were skipped
};

/// Replays the journal on a fresh embedded world. The first entry must be
/// the deployment; its (from, nonce) pins the contract at its source
/// address. Failed transactions contribute nothing and are skipped unless
/// the journal marks them successful, which raises ReplayDivergence.
ReplayResult replay_journal(const TransactionJournal& journal,
                            const evm::GasSchedule& schedule);

/// Left-fold of write lists; zero values delete their key.
StateSnapshot apply_diffs(StateSnapshot base, const std::vector<TraceDiff>& diffs);

/// Root of the snapshot's secure storage trie.
Hash32 snapshot_root(const StateSnapshot& snapshot);

}  // namespace evmport::reconstruct
