// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/trie/node_store.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace evmport::trie {

std::optional<Bytes> InMemoryNodeStore::get(const Hash32& hash) const {
    const auto it = nodes_.find(hash);
    if (it == nodes_.end())
        return std::nullopt;
    return it->second;
}

void InMemoryNodeStore::put(const Hash32& hash, ByteView rlp) {
    nodes_[hash] = Bytes{rlp};
}

FileNodeStore::FileNodeStore(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto sep = line.find(' ');
        if (sep == std::string::npos)
            throw std::runtime_error{"node store: malformed line in " + path_.string()};
        const auto hash = hash_from_hex(line.substr(0, sep));
        const auto rlp = from_hex(line.substr(sep + 1));
        if (!hash || !rlp)
            throw std::runtime_error{"node store: bad hex in " + path_.string()};
        cache_[*hash] = *rlp;
    }
}

std::optional<Bytes> FileNodeStore::get(const Hash32& hash) const {
    const auto it = cache_.find(hash);
    if (it == cache_.end())
        return std::nullopt;
    return it->second;
}

void FileNodeStore::put(const Hash32& hash, ByteView rlp) {
    const auto [it, inserted] = cache_.emplace(hash, Bytes{rlp});
    if (!inserted)
        return;  // content-addressed: an existing entry is identical
    std::ofstream out(path_, std::ios::app);
    if (!out)
        throw std::runtime_error{"node store: cannot open " + path_.string()};
    out << to_hex(view(hash), /*with_prefix=*/false) << ' '
        << to_hex(rlp, /*with_prefix=*/false) << '\n';
}

}  // namespace evmport::trie
