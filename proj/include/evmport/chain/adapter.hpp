// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/reconstruct/journal.hpp>
#include <evmport/reconstruct/replay.hpp>
#include <evmport/trie/trie.hpp>

#include <optional>
#include <string>

namespace evmport::chain {

struct EndpointUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TransportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MethodUnsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BlockRangeUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DeploymentNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ChainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Transaction {
    Address from{};
    std::optional<Address> to;  // absent = contract creation
    Bytes data;
    uint64_t gas = 0;
    std::optional<uint64_t> nonce;  // defaults to the account nonce
};

struct Receipt {
    bool success = false;
    std::optional<Address> contract_address;
    uint64_t gas_used = 0;
    uint64_t block = 0;
    uint64_t index = 0;
    Hash32 tx_hash{};
};

struct RecordedTransaction {
    reconstruct::JournalEntry entry;
    Receipt receipt;
};

/// Read/write access to one chain, embedded or remote. Blocks are
/// numbered from 1; block_number() is the latest mined block.
class ChainAdapter {
  public:
    virtual ~ChainAdapter() = default;

    virtual std::string describe() const = 0;
    virtual uint64_t block_number() const = 0;

    virtual Bytes get_code(const Address& address) const = 0;
    virtual uint64_t get_nonce(const Address& address) const = 0;
    virtual std::optional<trie::Account> get_account(const Address& address) const = 0;
    virtual std::optional<Word> get_storage_at(const Address& address, const Word& key) const = 0;

    /// Full pre-hash storage where the backend can enumerate it; remote
    /// nodes typically cannot, returning nullopt.
    virtual std::optional<StorageMap> get_storage(const Address& address) const = 0;

    virtual Hash32 get_storage_root(const Address& address) const = 0;

    virtual std::vector<RecordedTransaction> block_transactions(uint64_t block) const = 0;

    virtual Receipt send_transaction(const Transaction& tx) = 0;

    /// Storage writes of one mined transaction as seen by `contract`;
    /// throws MethodUnsupported when the backend cannot trace.
    virtual reconstruct::TraceDiff trace_transaction(uint64_t block, uint64_t index,
                                                     const Address& contract) const = 0;
};

}  // namespace evmport::chain
