// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/word.hpp>

#include <map>

namespace evmport {

/// Contract storage keyed by the original (pre-hash) slot keys. Ordered so
/// that iteration, code emission and chunking are deterministic.
using StorageMap = std::map<Word, Word>;

/// The portable essence of a contract: its storage at a block height.
/// Invariant: no zero values — an absent key means zero.
struct StateSnapshot {
    StorageMap entries;
    uint64_t block_height = 0;
    Address contract{};

    bool operator==(const StateSnapshot& other) const { return entries == other.entries; }
};

/// Assigns `value` at `key`, erasing the entry when value is zero.
inline void snapshot_assign(StorageMap& entries, const Word& key, const Word& value) {
    if (value == 0)
        entries.erase(key);
    else
        entries[key] = value;
}

}  // namespace evmport
