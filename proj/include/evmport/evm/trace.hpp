// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/state.hpp>

#include <variant>
#include <vector>

namespace evmport::evm {

/// One SSTORE as seen by the contract: key is the pre-hash slot key
/// exactly as it sat on the stack. A zero value clears the slot.
struct StorageWrite {
    Address address{};
    Word key;
    Word value;

    bool operator==(const StorageWrite&) const = default;
};

enum class CallKind { Message, Delegate, Create };

struct CallEvent {
    CallKind kind = CallKind::Message;
    Address from{};
    Address to{};
};

struct CreateEvent {
    Address address{};
};

struct DestroyEvent {
    Address address{};
};

using TraceEvent = std::variant<StorageWrite, CallEvent, CreateEvent, DestroyEvent>;

/// Events of one successful execution, in order; reverted sub-calls
/// contribute nothing.
struct TraceRecord {
    std::vector<TraceEvent> events;

    std::vector<StorageWrite> storage_writes(const Address& contract) const {
        std::vector<StorageWrite> out;
        for (const TraceEvent& event : events) {
            if (const auto* write = std::get_if<StorageWrite>(&event)) {
                if (write->address == contract)
                    out.push_back(*write);
            }
        }
        return out;
    }
};

/// Folds writes into a storage map; zero values delete.
inline void apply_writes(StorageMap& entries, const std::vector<StorageWrite>& writes) {
    for (const StorageWrite& w : writes)
        snapshot_assign(entries, w.key, w.value);
}

}  // namespace evmport::evm
