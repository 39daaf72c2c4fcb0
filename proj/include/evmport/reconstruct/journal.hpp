// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/bytes.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <vector>

namespace evmport::reconstruct {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One transaction as discovered on the source chain. A missing `to`
/// marks the deployment.
struct JournalEntry {
    Address from{};
    std::optional<Address> to;
    Bytes data;
    uint64_t gas = 0;
    uint64_t nonce = 0;
    uint64_t block = 0;
    std::optional<bool> status;  // success flag when the source provides one

    bool operator==(const JournalEntry&) const = default;
};

/// Ordered by (block, intra-block position); the first relevant entry is
/// the deployment.
using TransactionJournal = std::vector<JournalEntry>;

nlohmann::json journal_entry_to_json(const JournalEntry& entry);
JournalEntry journal_entry_from_json(const nlohmann::json& j);

nlohmann::json journal_to_json(const TransactionJournal& journal);
TransactionJournal journal_from_json(const nlohmann::json& j);

TransactionJournal load_journal_file(const std::filesystem::path& path);
void save_journal_file(const std::filesystem::path& path, const TransactionJournal& journal);

}  // namespace evmport::reconstruct
