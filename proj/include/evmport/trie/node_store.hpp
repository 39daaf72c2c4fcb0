// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/bytes.hpp>

#include <filesystem>
#include <map>
#include <optional>

namespace evmport::trie {

/// Persistence interface for trie nodes keyed by the keccak256 of their
/// RLP encoding.
class NodeStore {
  public:
    virtual ~NodeStore() = default;
    virtual std::optional<Bytes> get(const Hash32& hash) const = 0;
    virtual void put(const Hash32& hash, ByteView rlp) = 0;
};

class InMemoryNodeStore final : public NodeStore {
  public:
    std::optional<Bytes> get(const Hash32& hash) const override;
    void put(const Hash32& hash, ByteView rlp) override;

    size_t size() const noexcept { return nodes_.size(); }

  private:
    std::map<Hash32, Bytes> nodes_;
};

/// Durable key/value backend: an append-only file of hash/rlp hex lines,
/// loaded into memory on open. Suited to desk-scale tries.
class FileNodeStore final : public NodeStore {
  public:
    explicit FileNodeStore(std::filesystem::path path);

    std::optional<Bytes> get(const Hash32& hash) const override;
    void put(const Hash32& hash, ByteView rlp) override;

    size_t size() const noexcept { return cache_.size(); }

  private:
    std::filesystem::path path_;
    std::map<Hash32, Bytes> cache_;
};

}  // namespace evmport::trie
