// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/evm/world.hpp>

#include <evmport/encoding/keccak.hpp>

namespace evmport::evm {

trie::Account WorldState::account_summary(const Address& address) const {
    trie::Account out;
    const AccountState* account = find(address);
    if (!account) {
        out.code_hash = keccak256(Bytes{});
        return out;
    }
    out.nonce = account->nonce;
    out.balance = account->balance;
    out.storage_root = trie::secure_storage_root(account->storage);
    out.code_hash = keccak256(account->code);
    return out;
}

}  // namespace evmport::evm
