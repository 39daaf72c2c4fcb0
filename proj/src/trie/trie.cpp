// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/trie/trie.hpp>

#include <evmport/encoding/keccak.hpp>

#include <algorithm>
#include <cassert>

namespace evmport::trie {

namespace {

using Path = std::vector<uint8_t>;

Path subpath(const Path& p, size_t from) {
    return Path(p.begin() + static_cast<ptrdiff_t>(from), p.end());
}

Path concat(uint8_t head, const Path& tail) {
    Path out;
    out.reserve(1 + tail.size());
    out.push_back(head);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

Path concat(const Path& a, const Path& b) {
    Path out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

size_t common_prefix_len(const Path& a, const Path& b) {
    const size_t n = std::min(a.size(), b.size());
    size_t i = 0;
    while (i < n && a[i] == b[i])
        ++i;
    return i;
}

bool starts_with(const Path& p, const Path& prefix) {
    return p.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), p.begin());
}

/// Re-expresses a branch whose population may have dropped below the
/// structural minimum (branch collapse after deletion).
NodePtr normalize_branch(std::array<NodePtr, 16> children, Bytes value) {
    int occupied = -1;
    int count = 0;
    for (int i = 0; i < 16; ++i) {
        if (children[static_cast<size_t>(i)]) {
            occupied = i;
            ++count;
        }
    }
    if (count == 0 && value.empty())
        return nullptr;
    if (count == 0)
        return Node::leaf({}, std::move(value));
    if (count == 1 && value.empty()) {
        const auto nib = static_cast<uint8_t>(occupied);
        const NodePtr& child = children[static_cast<size_t>(occupied)];
        switch (child->kind()) {
            case Node::Kind::Leaf:
                return Node::leaf(concat(nib, child->path()), child->value());
            case Node::Kind::Extension:
                return Node::extension(concat(nib, child->path()), child->child());
            case Node::Kind::Branch:
                return Node::extension({nib}, child);
        }
    }
    return Node::branch(std::move(children), std::move(value));
}

NodePtr insert_node(const NodePtr& node, const Path& path, const Bytes& value);

/// Splits two divergent paths into a (possibly extension-wrapped) branch.
NodePtr split(const Path& common, const Path& a_rest, const Bytes& a_value, const Path& b_rest,
              NodePtr b_node, const Bytes& b_leaf_value) {
    std::array<NodePtr, 16> children{};
    Bytes branch_value;

    if (a_rest.empty())
        branch_value = a_value;
    else
        children[a_rest[0]] = Node::leaf(subpath(a_rest, 1), a_value);

    if (b_rest.empty()) {
        assert(!b_node);
        branch_value = b_leaf_value;
    } else if (b_node) {
        // Re-rooting an existing child under the branch.
        children[b_rest[0]] = b_rest.size() == 1
                                  ? b_node
                                  : Node::extension(subpath(b_rest, 1), std::move(b_node));
    } else {
        children[b_rest[0]] = Node::leaf(subpath(b_rest, 1), b_leaf_value);
    }

    NodePtr branch = Node::branch(std::move(children), std::move(branch_value));
    if (common.empty())
        return branch;
    return Node::extension(common, std::move(branch));
}

NodePtr insert_node(const NodePtr& node, const Path& path, const Bytes& value) {
    if (!node)
        return Node::leaf(path, value);

    switch (node->kind()) {
        case Node::Kind::Leaf: {
            const size_t common = common_prefix_len(path, node->path());
            if (common == path.size() && common == node->path().size())
                return Node::leaf(path, value);
            return split(Path(path.begin(), path.begin() + static_cast<ptrdiff_t>(common)),
                         subpath(path, common), value, subpath(node->path(), common), nullptr,
                         node->value());
        }
        case Node::Kind::Extension: {
            const size_t common = common_prefix_len(path, node->path());
            if (common == node->path().size()) {
                NodePtr child = insert_node(node->child(), subpath(path, common), value);
                return Node::extension(node->path(), std::move(child));
            }
            return split(Path(path.begin(), path.begin() + static_cast<ptrdiff_t>(common)),
                         subpath(path, common), value, subpath(node->path(), common),
                         node->child(), {});
        }
        case Node::Kind::Branch: {
            if (path.empty())
                return Node::branch(node->children(), value);
            auto children = node->children();
            children[path[0]] = insert_node(children[path[0]], subpath(path, 1), value);
            return Node::branch(std::move(children), node->value());
        }
    }
    return nullptr;  // unreachable
}

NodePtr erase_node(const NodePtr& node, const Path& path) {
    if (!node)
        return nullptr;

    switch (node->kind()) {
        case Node::Kind::Leaf:
            return node->path() == path ? nullptr : node;
        case Node::Kind::Extension: {
            if (!starts_with(path, node->path()))
                return node;
            NodePtr child = erase_node(node->child(), subpath(path, node->path().size()));
            if (child == node->child())
                return node;
            if (!child)
                return nullptr;
            switch (child->kind()) {
                case Node::Kind::Leaf:
                    return Node::leaf(concat(node->path(), child->path()), child->value());
                case Node::Kind::Extension:
                    return Node::extension(concat(node->path(), child->path()), child->child());
                case Node::Kind::Branch:
                    return Node::extension(node->path(), std::move(child));
            }
            return nullptr;  // unreachable
        }
        case Node::Kind::Branch: {
            auto children = node->children();
            Bytes value = node->value();
            if (path.empty()) {
                if (value.empty())
                    return node;
                value.clear();
            } else {
                NodePtr child = erase_node(children[path[0]], subpath(path, 1));
                if (child == children[path[0]])
                    return node;
                children[path[0]] = std::move(child);
            }
            return normalize_branch(std::move(children), std::move(value));
        }
    }
    return nullptr;  // unreachable
}

const Node* find_node(const NodePtr& root, const Path& path, size_t pos) {
    const Node* node = root.get();
    size_t i = pos;
    while (node) {
        switch (node->kind()) {
            case Node::Kind::Leaf: {
                const Path rest(path.begin() + static_cast<ptrdiff_t>(i), path.end());
                return node->path() == rest ? node : nullptr;
            }
            case Node::Kind::Extension: {
                const auto& ep = node->path();
                if (path.size() - i < ep.size() ||
                    !std::equal(ep.begin(), ep.end(), path.begin() + static_cast<ptrdiff_t>(i)))
                    return nullptr;
                i += ep.size();
                node = node->child().get();
                break;
            }
            case Node::Kind::Branch: {
                if (i == path.size())
                    return node->value().empty() ? nullptr : node;
                const NodePtr& child = node->children()[path[i]];
                ++i;
                node = child.get();
                break;
            }
        }
    }
    return nullptr;
}

rlp::Item node_ref(const Node& node, Bytes* encoded_out = nullptr) {
    rlp::Item item = node.encode();
    Bytes enc = rlp::encode(item);
    if (enc.size() < 32) {
        if (encoded_out)
            encoded_out->clear();
        return item;
    }
    const Hash32 h = keccak256(enc);
    if (encoded_out)
        *encoded_out = std::move(enc);
    return rlp::Item::string(view(h));
}

}  // namespace

NodePtr Node::leaf(std::vector<uint8_t> path, Bytes value) {
    auto n = std::make_shared<Node>();
    n->kind_ = Kind::Leaf;
    n->path_ = std::move(path);
    n->value_ = std::move(value);
    return n;
}

NodePtr Node::extension(std::vector<uint8_t> path, NodePtr child) {
    assert(!path.empty());
    assert(child);
    auto n = std::make_shared<Node>();
    n->kind_ = Kind::Extension;
    n->path_ = std::move(path);
    n->child_ = std::move(child);
    return n;
}

NodePtr Node::branch(std::array<NodePtr, 16> children, Bytes value) {
    auto n = std::make_shared<Node>();
    n->kind_ = Kind::Branch;
    n->children_ = std::move(children);
    n->value_ = std::move(value);
    return n;
}

rlp::Item Node::encode() const {
    switch (kind_) {
        case Kind::Leaf:
            return rlp::Item::list({rlp::Item::string(view(hex_prefix({path_, /*leaf=*/true}))),
                                    rlp::Item::string(value_)});
        case Kind::Extension:
            return rlp::Item::list(
                {rlp::Item::string(view(hex_prefix({path_, /*leaf=*/false}))), node_ref(*child_)});
        case Kind::Branch: {
            std::vector<rlp::Item> items;
            items.reserve(17);
            for (const NodePtr& child : children_)
                items.push_back(child ? node_ref(*child) : rlp::Item::string(Bytes{}));
            items.push_back(rlp::Item::string(value_));
            return rlp::Item::list(std::move(items));
        }
    }
    return {};  // unreachable
}

void Trie::insert(ByteView key, ByteView value) {
    const Path path = bytes_to_nibbles(key).values;
    if (value.empty())
        root_ = erase_node(root_, path);
    else
        root_ = insert_node(root_, path, Bytes{value});
}

std::optional<Bytes> Trie::get(ByteView key) const {
    const Path path = bytes_to_nibbles(key).values;
    const Node* node = find_node(root_, path, 0);
    if (!node)
        return std::nullopt;
    return node->value();
}

Hash32 Trie::root_hash() const {
    if (!root_)
        return empty_trie_root();
    return keccak256(rlp::encode(root_->encode()));
}

std::vector<Bytes> Trie::prove(ByteView key) const {
    const Path path = bytes_to_nibbles(key).values;
    std::vector<Bytes> proof;
    const Node* node = root_.get();
    if (!node)
        throw KeyAbsent{};
    proof.push_back(rlp::encode(node->encode()));
    size_t i = 0;
    while (true) {
        switch (node->kind()) {
            case Node::Kind::Leaf: {
                const Path rest(path.begin() + static_cast<ptrdiff_t>(i), path.end());
                if (node->path() != rest)
                    throw KeyAbsent{};
                return proof;
            }
            case Node::Kind::Extension: {
                const auto& ep = node->path();
                if (path.size() - i < ep.size() ||
                    !std::equal(ep.begin(), ep.end(), path.begin() + static_cast<ptrdiff_t>(i)))
                    throw KeyAbsent{};
                i += ep.size();
                Bytes enc;
                node_ref(*node->child(), &enc);
                if (!enc.empty())
                    proof.push_back(std::move(enc));
                node = node->child().get();
                break;
            }
            case Node::Kind::Branch: {
                if (i == path.size()) {
                    if (node->value().empty())
                        throw KeyAbsent{};
                    return proof;
                }
                const NodePtr& child = node->children()[path[i]];
                if (!child)
                    throw KeyAbsent{};
                ++i;
                Bytes enc;
                node_ref(*child, &enc);
                if (!enc.empty())
                    proof.push_back(std::move(enc));
                node = child.get();
                break;
            }
        }
    }
}

namespace {

void commit_node(const Node& node, NodeStore& store) {
    const Bytes enc = rlp::encode(node.encode());
    if (enc.size() >= 32)
        store.put(keccak256(enc), view(enc));
    switch (node.kind()) {
        case Node::Kind::Leaf:
            break;
        case Node::Kind::Extension:
            commit_node(*node.child(), store);
            break;
        case Node::Kind::Branch:
            for (const NodePtr& child : node.children())
                if (child)
                    commit_node(*child, store);
            break;
    }
}

}  // namespace

void Trie::commit(NodeStore& store) const {
    if (!root_)
        return;
    // The root is stored even when small so lookups can always start from
    // the root hash.
    const Bytes enc = rlp::encode(root_->encode());
    store.put(keccak256(enc), view(enc));
    commit_node(*root_, store);
}

Hash32 empty_trie_root() {
    return keccak256(rlp::encode_string({}));
}

namespace {

/// Shared walk over decoded node items; `next` resolves a 32-byte hash
/// reference to the referenced node's encoding.
template <typename NextFn>
std::optional<Bytes> walk_nodes(const Hash32& root, ByteView key, NextFn&& next) {
    const Path path = bytes_to_nibbles(key).values;
    Bytes enc = next(root);
    rlp::Item item;
    try {
        item = rlp::decode(view(enc));
    } catch (const rlp::MalformedRlp&) {
        throw BadProof{"proof: node is not valid RLP"};
    }
    size_t i = 0;
    while (true) {
        if (!item.is_list())
            throw BadProof{"proof: node is not a list"};
        const auto& fields = item.items();
        if (fields.size() == 17) {
            if (i == path.size()) {
                if (fields[16].is_list() || fields[16].str().empty())
                    return std::nullopt;
                return fields[16].str();
            }
            const rlp::Item& ref = fields[path[i]];
            ++i;
            if (ref.is_list()) {
                // Copy before assigning: `ref` points into `item`'s own tree.
                rlp::Item inline_child{ref};
                item = std::move(inline_child);
                continue;
            }
            if (ref.str().empty())
                return std::nullopt;
            if (ref.str().size() != 32)
                throw BadProof{"proof: branch reference is neither empty, inline nor a hash"};
            Hash32 h;
            std::copy(ref.str().begin(), ref.str().end(), h.begin());
            enc = next(h);
            try {
                item = rlp::decode(view(enc));
            } catch (const rlp::MalformedRlp&) {
                throw BadProof{"proof: node is not valid RLP"};
            }
            continue;
        }
        if (fields.size() != 2)
            throw BadProof{"proof: node is neither a pair nor a branch"};
        if (fields[0].is_list())
            throw BadProof{"proof: malformed path field"};
        Nibbles np;
        try {
            np = hex_prefix_decode(view(fields[0].str()));
        } catch (const std::invalid_argument&) {
            throw BadProof{"proof: malformed hex-prefix path"};
        }
        const Path rest(path.begin() + static_cast<ptrdiff_t>(i), path.end());
        if (np.leaf) {
            if (np.values != rest)
                return std::nullopt;
            if (fields[1].is_list())
                throw BadProof{"proof: leaf value is a list"};
            return fields[1].str();
        }
        // extension
        if (np.values.empty())
            throw BadProof{"proof: empty extension path"};
        if (rest.size() < np.values.size() ||
            !std::equal(np.values.begin(), np.values.end(), rest.begin()))
            return std::nullopt;
        i += np.values.size();
        const rlp::Item& ref = fields[1];
        if (ref.is_list()) {
            rlp::Item inline_child{ref};
            item = std::move(inline_child);
            continue;
        }
        if (ref.str().size() != 32)
            throw BadProof{"proof: extension child is neither inline nor a hash"};
        Hash32 h;
        std::copy(ref.str().begin(), ref.str().end(), h.begin());
        enc = next(h);
        try {
            item = rlp::decode(view(enc));
        } catch (const rlp::MalformedRlp&) {
            throw BadProof{"proof: node is not valid RLP"};
        }
    }
}

}  // namespace

Bytes verify_proof(const Hash32& root, ByteView key, const std::vector<Bytes>& proof) {
    size_t cursor = 0;
    auto next = [&](const Hash32& expected) -> Bytes {
        if (cursor >= proof.size())
            throw BadProof{"proof: truncated"};
        const Bytes& enc = proof[cursor++];
        if (keccak256(enc) != expected)
            throw BadProof{"proof: hash mismatch"};
        return enc;
    };
    const auto value = walk_nodes(root, key, next);
    if (!value)
        throw BadProof{"proof: key not present under this root"};
    if (cursor != proof.size())
        throw BadProof{"proof: unused trailing nodes"};
    return *value;
}

std::optional<Bytes> lookup_from_store(const NodeStore& store, const Hash32& root, ByteView key) {
    if (root == empty_trie_root())
        return std::nullopt;
    auto next = [&](const Hash32& expected) -> Bytes {
        const auto enc = store.get(expected);
        if (!enc)
            throw BadProof{"store: missing node"};
        return *enc;
    };
    return walk_nodes(root, key, next);
}

Trie secure_storage_trie(const StorageMap& entries) {
    Trie trie;
    for (const auto& [key, value] : entries) {
        if (value == 0)
            throw ZeroValueInSnapshot{};
        const Hash32 hashed_key = keccak256(view(word_to_bytes32(key)));
        const Bytes stored = rlp::encode_string(view(word_to_min_bytes(value)));
        trie.insert(view(hashed_key), view(stored));
    }
    return trie;
}

Hash32 secure_storage_root(const StorageMap& entries) {
    return secure_storage_trie(entries).root_hash();
}

Hash32 secure_storage_root(const StateSnapshot& snapshot) {
    return secure_storage_root(snapshot.entries);
}

Bytes account_rlp(const Account& account) {
    return rlp::encode(rlp::Item::list({
        rlp::Item::integer(account.nonce),
        rlp::Item::string(view(word_to_stripped_bytes(account.balance))),
        rlp::Item::string(view(account.storage_root)),
        rlp::Item::string(view(account.code_hash)),
    }));
}

}  // namespace evmport::trie
