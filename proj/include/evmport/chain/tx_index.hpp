// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/chain/adapter.hpp>

#include <filesystem>

namespace evmport::chain {

/// Durable per-contract journal store: one append-only NDJSON file per
/// contract plus a sidecar watermark recording the highest scanned block.
class TransactionIndex {
  public:
    explicit TransactionIndex(std::filesystem::path dir);

    reconstruct::TransactionJournal journal(const Address& contract) const;
    uint64_t watermark(const Address& contract) const;

    void append(const Address& contract, const std::vector<reconstruct::JournalEntry>& entries,
                uint64_t new_watermark);

    const std::filesystem::path& directory() const noexcept { return dir_; }

  private:
    std::filesystem::path journal_path(const Address& contract) const;
    std::filesystem::path watermark_path(const Address& contract) const;

    std::filesystem::path dir_;
};

/// Scans [from_block, to_block] for transactions addressed to `contract`
/// plus its deployment (identified by the receipt's contract address),
/// merges them into the persistent index and returns the full journal.
/// Re-indexing any range is idempotent.
reconstruct::TransactionJournal index_transactions(const ChainAdapter& chain,
                                                   const Address& contract, uint64_t from_block,
                                                   uint64_t to_block, TransactionIndex& index);

}  // namespace evmport::chain
