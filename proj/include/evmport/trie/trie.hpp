// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/encoding/hex_prefix.hpp>
#include <evmport/encoding/rlp.hpp>
#include <evmport/state.hpp>
#include <evmport/trie/node_store.hpp>

#include <array>
#include <memory>
#include <stdexcept>
#include <vector>

namespace evmport::trie {

struct KeyAbsent : std::runtime_error {
    KeyAbsent() : std::runtime_error("trie: key not present") {}
};
struct BadProof : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroValueInSnapshot : std::runtime_error {
    ZeroValueInSnapshot() : std::runtime_error("snapshot: zero value (zero means absent)") {}
};

class Node;
using NodePtr = std::shared_ptr<const Node>;

/// Modified Merkle Patricia Trie node. Children shorter than 32 bytes in
/// RLP form are embedded inline in their parent; all others are referenced
/// by the hash of their encoding.
class Node {
  public:
    enum class Kind { Leaf, Extension, Branch };

    static NodePtr leaf(std::vector<uint8_t> path, Bytes value);
    static NodePtr extension(std::vector<uint8_t> path, NodePtr child);
    static NodePtr branch(std::array<NodePtr, 16> children, Bytes value);

    Kind kind() const noexcept { return kind_; }
    const std::vector<uint8_t>& path() const noexcept { return path_; }
    const Bytes& value() const noexcept { return value_; }
    const NodePtr& child() const noexcept { return child_; }
    const std::array<NodePtr, 16>& children() const noexcept { return children_; }

    rlp::Item encode() const;

  private:
    Kind kind_ = Kind::Leaf;
    std::vector<uint8_t> path_;  // leaf and extension
    Bytes value_;                // leaf, and optional branch value
    NodePtr child_;              // extension
    std::array<NodePtr, 16> children_{};
};

/// Persistent-structure trie: mutations return a new root that shares the
/// unchanged subtrees, so readers may hold old roots concurrently.
class Trie {
  public:
    Trie() = default;

    /// Inserts key/value. An empty value deletes the key and renormalizes
    /// the structure, mirroring SSTORE-of-zero semantics.
    void insert(ByteView key, ByteView value);

    std::optional<Bytes> get(ByteView key) const;

    Hash32 root_hash() const;

    const NodePtr& root() const noexcept { return root_; }
    bool empty() const noexcept { return root_ == nullptr; }

    /// Ordered list of RLP-encoded nodes from the root toward `key`;
    /// inline-embedded children ride within their parent's encoding.
    std::vector<Bytes> prove(ByteView key) const;

    /// Writes every node's RLP encoding into `store`, keyed by hash.
    void commit(NodeStore& store) const;

  private:
    NodePtr root_;
};

/// Root of the empty trie: keccak256(rlp("")).
Hash32 empty_trie_root();

/// Checks the hash chain of `proof` from `root` along `key` and returns
/// the stored value; throws BadProof on any inconsistency.
Bytes verify_proof(const Hash32& root, ByteView key, const std::vector<Bytes>& proof);

/// Walks a committed trie out of a node store; nullopt when the key is
/// absent, BadProof when the store is missing or corrupt along the path.
std::optional<Bytes> lookup_from_store(const NodeStore& store, const Hash32& root, ByteView key);

/// Root of the secure storage trie for a snapshot: every key is inserted
/// at keccak256(key as 32-byte big-endian) with value rlp(value stripped
/// of leading zeros). Throws ZeroValueInSnapshot on zero values.
Hash32 secure_storage_root(const StateSnapshot& snapshot);
Hash32 secure_storage_root(const StorageMap& entries);

/// Builds the secure storage trie itself (for proofs over snapshots).
Trie secure_storage_trie(const StorageMap& entries);

/// Account payload as persisted in the state trie.
struct Account {
    uint64_t nonce = 0;
    Word balance = 0;
    Hash32 storage_root = empty_trie_root();
    Hash32 code_hash{};

    bool operator==(const Account&) const = default;
};

Bytes account_rlp(const Account& account);

}  // namespace evmport::trie
