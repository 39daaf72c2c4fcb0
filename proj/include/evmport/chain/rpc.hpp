// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/chain/adapter.hpp>

#include <memory>

namespace evmport::chain {

/// JSON-RPC 2.0 client speaking the standard Ethereum method names.
/// Transactions go out as pre-encoded raw bytes via
/// eth_sendRawTransaction; traces come back from debug_traceTransaction
/// structLogs and are normalized into TraceDiff (top-level SSTOREs only).
class RpcChain final : public ChainAdapter {
  public:
    /// Connects and performs a web3_clientVersion handshake; throws
    /// EndpointUnreachable when the endpoint does not answer.
    explicit RpcChain(const std::string& url, int timeout_seconds = 10);
    ~RpcChain() override;

    RpcChain(RpcChain&&) noexcept;
    RpcChain& operator=(RpcChain&&) noexcept;

    std::string describe() const override;
    uint64_t block_number() const override;
    Bytes get_code(const Address& address) const override;
    uint64_t get_nonce(const Address& address) const override;
    std::optional<trie::Account> get_account(const Address& address) const override;
    std::optional<Word> get_storage_at(const Address& address, const Word& key) const override;
    std::optional<StorageMap> get_storage(const Address& address) const override;

    /// storage root via eth_getProof; MethodUnsupported when the node
    /// lacks it (callers fall back to per-slot reads over known keys).
    Hash32 get_storage_root(const Address& address) const override;

    std::vector<RecordedTransaction> block_transactions(uint64_t block) const override;

    Receipt send_transaction(const Transaction& tx) override;
    Receipt send_raw_transaction(ByteView raw);

    std::optional<RecordedTransaction> get_transaction(const Hash32& hash) const;
    std::optional<Receipt> get_receipt(const Hash32& hash) const;

    reconstruct::TraceDiff trace_transaction(uint64_t block, uint64_t index,
                                             const Address& contract) const override;
    reconstruct::TraceDiff trace_transaction_hash(const Hash32& hash,
                                                  const Address& contract) const;

    const std::string& client_version() const noexcept { return client_version_; }

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::string client_version_;
};

}  // namespace evmport::chain
