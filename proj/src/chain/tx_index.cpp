// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/chain/tx_index.hpp>

#include <algorithm>
#include <fstream>

namespace evmport::chain {

TransactionIndex::TransactionIndex(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path TransactionIndex::journal_path(const Address& contract) const {
    return dir_ / (to_hex(contract) + ".journal.ndjson");
}

std::filesystem::path TransactionIndex::watermark_path(const Address& contract) const {
    return dir_ / (to_hex(contract) + ".watermark");
}

reconstruct::TransactionJournal TransactionIndex::journal(const Address& contract) const {
    std::ifstream in(journal_path(contract));
    reconstruct::TransactionJournal out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        out.push_back(reconstruct::journal_entry_from_json(nlohmann::json::parse(line)));
    }
    return out;
}

uint64_t TransactionIndex::watermark(const Address& contract) const {
    std::ifstream in(watermark_path(contract));
    uint64_t mark = 0;
    in >> mark;
    return in ? mark : 0;
}

void TransactionIndex::append(const Address& contract,
                              const std::vector<reconstruct::JournalEntry>& entries,
                              uint64_t new_watermark) {
    if (!entries.empty()) {
        std::ofstream out(journal_path(contract), std::ios::app);
        if (!out)
            throw ChainError{"index: cannot append to " + journal_path(contract).string()};
        for (const auto& entry : entries)
            out << reconstruct::journal_entry_to_json(entry).dump() << '\n';
    }
    std::ofstream mark(watermark_path(contract), std::ios::trunc);
    if (!mark)
        throw ChainError{"index: cannot write " + watermark_path(contract).string()};
    mark << new_watermark << '\n';
}

reconstruct::TransactionJournal index_transactions(const ChainAdapter& chain,
                                                   const Address& contract, uint64_t from_block,
                                                   uint64_t to_block, TransactionIndex& index) {
    if (from_block > to_block)
        throw ChainError{"index: from_block exceeds to_block"};
    if (to_block > chain.block_number())
        throw BlockRangeUnavailable{"index: block " + std::to_string(to_block) +
                                    " is beyond the chain head " +
                                    std::to_string(chain.block_number())};

    reconstruct::TransactionJournal existing = index.journal(contract);
    std::vector<reconstruct::JournalEntry> fresh;
    for (uint64_t block = std::max<uint64_t>(from_block, 1); block <= to_block; ++block) {
        for (const RecordedTransaction& tx : chain.block_transactions(block)) {
            const bool addressed = tx.entry.to && *tx.entry.to == contract;
            const bool deployment = !tx.entry.to && tx.receipt.contract_address &&
                                    *tx.receipt.contract_address == contract;
            if (!addressed && !deployment)
                continue;
            const bool already = std::any_of(
                existing.begin(), existing.end(), [&](const reconstruct::JournalEntry& e) {
                    return e.block == tx.entry.block && e == tx.entry;
                });
            if (!already)
                fresh.push_back(tx.entry);
        }
    }

    index.append(contract, fresh, std::max(index.watermark(contract), to_block));

    existing.insert(existing.end(), fresh.begin(), fresh.end());
    std::stable_sort(existing.begin(), existing.end(),
                     [](const auto& a, const auto& b) { return a.block < b.block; });

    if (existing.empty() || existing.front().to.has_value())
        throw DeploymentNotFound{"no deployment transaction for " + to_hex(contract) +
                                 " in the indexed range"};
    return existing;
}

}  // namespace evmport::chain
