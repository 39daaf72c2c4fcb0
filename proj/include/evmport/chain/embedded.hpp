// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/chain/adapter.hpp>
#include <evmport/evm/interpreter.hpp>

#include <filesystem>

namespace evmport::chain {

/// In-process chain: a WorldState plus the ordered transaction history,
/// persisted as a single JSON document so that two chains are just two
/// files. Senders are asserted, not signed; one transaction per block.
class EmbeddedChain final : public ChainAdapter {
  public:
    EmbeddedChain() = default;
    explicit EmbeddedChain(evm::GasSchedule schedule) : schedule_(schedule) {}

    static EmbeddedChain load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    std::string describe() const override;
    uint64_t block_number() const override { return blocks_.size(); }

    Bytes get_code(const Address& address) const override;
    uint64_t get_nonce(const Address& address) const override;
    std::optional<trie::Account> get_account(const Address& address) const override;
    std::optional<Word> get_storage_at(const Address& address, const Word& key) const override;
    std::optional<StorageMap> get_storage(const Address& address) const override;
    Hash32 get_storage_root(const Address& address) const override;
    std::vector<RecordedTransaction> block_transactions(uint64_t block) const override;
    Receipt send_transaction(const Transaction& tx) override;
    reconstruct::TraceDiff trace_transaction(uint64_t block, uint64_t index,
                                             const Address& contract) const override;

    const evm::WorldState& world() const noexcept { return world_; }
    const evm::GasSchedule& schedule() const noexcept { return schedule_; }

    /// All storage writes of a mined transaction, any address.
    const std::vector<evm::StorageWrite>& transaction_writes(uint64_t block,
                                                             uint64_t index) const;

  private:
    struct MinedTransaction {
        RecordedTransaction record;
        std::vector<evm::StorageWrite> writes;
    };

    const MinedTransaction& mined(uint64_t block, uint64_t index) const;

    evm::WorldState world_;
    evm::GasSchedule schedule_;
    std::vector<std::vector<MinedTransaction>> blocks_;
};

/// Raw-transaction byte format accepted by the embedded chain and its
/// JSON-RPC front: rlp([from, to-or-empty, data, gas, nonce]).
Bytes encode_raw_transaction(const Transaction& tx);
Transaction decode_raw_transaction(ByteView raw);

}  // namespace evmport::chain
