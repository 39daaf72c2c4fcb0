// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/state.hpp>
#include <evmport/trie/trie.hpp>

#include <map>
#include <set>

namespace evmport::evm {

struct AccountState {
    uint64_t nonce = 0;
    Word balance = 0;
    Bytes code;
    StorageMap storage;  // pre-hash keys, no zero values

    bool operator==(const AccountState&) const = default;
};

/// Immutable-by-convention value type: interpreter runs produce a new
/// WorldState and leave their input untouched, so snapshots can be shared
/// across concurrently executing transactions.
struct WorldState {
    std::map<Address, AccountState> accounts;
    std::set<Address> destroyed;

    bool operator==(const WorldState&) const = default;

    const AccountState* find(const Address& address) const {
        const auto it = accounts.find(address);
        return it == accounts.end() ? nullptr : &it->second;
    }

    AccountState& get_or_create(const Address& address) { return accounts[address]; }

    Bytes code_at(const Address& address) const {
        const AccountState* account = find(address);
        return account ? account->code : Bytes{};
    }

    /// The account quadruple as the state trie would persist it.
    trie::Account account_summary(const Address& address) const;
};

}  // namespace evmport::evm
