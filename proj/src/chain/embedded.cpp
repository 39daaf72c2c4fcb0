// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/chain/embedded.hpp>

#include <evmport/encoding/keccak.hpp>

#include <nlohmann/json.hpp>

#include <fstream>

namespace evmport::chain {

using evm::GasSchedule;
using evm::VmStatus;
using nlohmann::json;

namespace {

Hash32 transaction_hash(const Transaction& tx, uint64_t nonce) {
    Transaction t = tx;
    t.nonce = nonce;
    return keccak256(encode_raw_transaction(t));
}

json schedule_to_json(const GasSchedule& s) {
    return json{{"sstore_set", s.sstore_set},
                {"sstore_reset", s.sstore_reset},
                {"base_op", s.base_op},
                {"codecopy_word", s.codecopy_word},
                {"tx_base", s.tx_base},
                {"tx_data_zero_byte", s.tx_data_zero_byte},
                {"tx_data_nonzero_byte", s.tx_data_nonzero_byte},
                {"code_deposit_per_byte", s.code_deposit_per_byte},
                {"call_base", s.call_base},
                {"block_gas_limit", s.block_gas_limit}};
}

GasSchedule schedule_from_json(const json& j) {
    GasSchedule s;
    s.sstore_set = j.value("sstore_set", s.sstore_set);
    s.sstore_reset = j.value("sstore_reset", s.sstore_reset);
    s.base_op = j.value("base_op", s.base_op);
    s.codecopy_word = j.value("codecopy_word", s.codecopy_word);
    s.tx_base = j.value("tx_base", s.tx_base);
    s.tx_data_zero_byte = j.value("tx_data_zero_byte", s.tx_data_zero_byte);
    s.tx_data_nonzero_byte = j.value("tx_data_nonzero_byte", s.tx_data_nonzero_byte);
    s.code_deposit_per_byte = j.value("code_deposit_per_byte", s.code_deposit_per_byte);
    s.call_base = j.value("call_base", s.call_base);
    s.block_gas_limit = j.value("block_gas_limit", s.block_gas_limit);
    return s;
}

Address address_from_json(const json& j) {
    const auto a = address_from_hex(j.get<std::string>());
    if (!a)
        throw ChainError{"world state: bad address " + j.get<std::string>()};
    return *a;
}

}  // namespace

Bytes encode_raw_transaction(const Transaction& tx) {
    std::vector<rlp::Item> fields;
    fields.push_back(rlp::Item::string(view(tx.from)));
    fields.push_back(tx.to ? rlp::Item::string(view(*tx.to)) : rlp::Item::string(Bytes{}));
    fields.push_back(rlp::Item::string(view(tx.data)));
    fields.push_back(rlp::Item::integer(tx.gas));
    fields.push_back(rlp::Item::integer(tx.nonce.value_or(0)));
    return rlp::encode(rlp::Item::list(std::move(fields)));
}

Transaction decode_raw_transaction(ByteView raw) {
    const rlp::Item item = rlp::decode(raw);
    if (!item.is_list() || item.items().size() != 5)
        throw ChainError{"raw transaction: expected a five-field list"};
    const auto& f = item.items();
    for (const auto& field : f)
        if (field.is_list())
            throw ChainError{"raw transaction: nested lists are not valid fields"};
    Transaction tx;
    if (f[0].str().size() != 20)
        throw ChainError{"raw transaction: sender is not 20 bytes"};
    std::copy(f[0].str().begin(), f[0].str().end(), tx.from.begin());
    if (!f[1].str().empty()) {
        if (f[1].str().size() != 20)
            throw ChainError{"raw transaction: recipient is not 20 bytes"};
        Address to;
        std::copy(f[1].str().begin(), f[1].str().end(), to.begin());
        tx.to = to;
    }
    tx.data = f[2].str();
    tx.gas = static_cast<uint64_t>(word_from_bytes(view(f[3].str())));
    tx.nonce = static_cast<uint64_t>(word_from_bytes(view(f[4].str())));
    return tx;
}

std::string EmbeddedChain::describe() const {
    return "embedded chain, " + std::to_string(blocks_.size()) + " blocks";
}

Bytes EmbeddedChain::get_code(const Address& address) const {
    return world_.code_at(address);
}

uint64_t EmbeddedChain::get_nonce(const Address& address) const {
    const auto* account = world_.find(address);
    return account ? account->nonce : 0;
}

std::optional<trie::Account> EmbeddedChain::get_account(const Address& address) const {
    if (!world_.find(address))
        return std::nullopt;
    return world_.account_summary(address);
}

std::optional<Word> EmbeddedChain::get_storage_at(const Address& address, const Word& key) const {
    const auto* account = world_.find(address);
    if (!account)
        return Word{0};
    const auto it = account->storage.find(key);
    return it == account->storage.end() ? Word{0} : it->second;
}

std::optional<StorageMap> EmbeddedChain::get_storage(const Address& address) const {
    const auto* account = world_.find(address);
    if (!account)
        return StorageMap{};
    return account->storage;
}

Hash32 EmbeddedChain::get_storage_root(const Address& address) const {
    return world_.account_summary(address).storage_root;
}

std::vector<RecordedTransaction> EmbeddedChain::block_transactions(uint64_t block) const {
    if (block == 0 || block > blocks_.size())
        throw BlockRangeUnavailable{"block " + std::to_string(block) + " is not available"};
    std::vector<RecordedTransaction> out;
    for (const MinedTransaction& mined : blocks_[block - 1])
        out.push_back(mined.record);
    return out;
}

const EmbeddedChain::MinedTransaction& EmbeddedChain::mined(uint64_t block,
                                                            uint64_t index) const {
    if (block == 0 || block > blocks_.size())
        throw BlockRangeUnavailable{"block " + std::to_string(block) + " is not available"};
    const auto& txs = blocks_[block - 1];
    if (index >= txs.size())
        throw ChainError{"no transaction " + std::to_string(index) + " in block " +
                         std::to_string(block)};
    return txs[index];
}

const std::vector<evm::StorageWrite>& EmbeddedChain::transaction_writes(uint64_t block,
                                                                        uint64_t index) const {
    return mined(block, index).writes;
}

reconstruct::TraceDiff EmbeddedChain::trace_transaction(uint64_t block, uint64_t index,
                                                        const Address& contract) const {
    reconstruct::TraceDiff diff;
    for (const evm::StorageWrite& write : mined(block, index).writes)
        if (write.address == contract)
            diff.writes.push_back({write.key, write.value});
    return diff;
}

Receipt EmbeddedChain::send_transaction(const Transaction& tx) {
    if (tx.gas > schedule_.block_gas_limit)
        throw ChainError{"transaction gas exceeds the block gas limit"};
    // No signatures here, but contract and destroyed accounts still can
    // never originate transactions.
    if (!world_.code_at(tx.from).empty())
        throw ChainError{"sender has contract code and cannot originate transactions"};
    if (world_.destroyed.contains(tx.from))
        throw ChainError{"sender was destroyed and cannot originate transactions"};

    const uint64_t account_nonce = get_nonce(tx.from);
    const uint64_t nonce = tx.nonce.value_or(account_nonce);
    if (nonce != account_nonce)
        throw ChainError{"nonce mismatch: expected " + std::to_string(account_nonce) + ", got " +
                         std::to_string(nonce)};

    const uint64_t intrinsic = evm::intrinsic_gas(schedule_, view(tx.data));
    if (intrinsic > tx.gas)
        throw ChainError{"intrinsic gas exceeds the transaction gas limit"};
    const uint64_t budget = tx.gas - intrinsic;

    MinedTransaction mined;
    Receipt& receipt = mined.record.receipt;
    receipt.block = blocks_.size() + 1;
    receipt.index = 0;
    receipt.tx_hash = transaction_hash(tx, nonce);

    VmStatus status;
    if (!tx.to) {
        const auto res = evm::execute_deploy(world_, tx.from, view(tx.data), budget, schedule_);
        status = res.status;
        receipt.gas_used = intrinsic + res.gas_used;
        if (res.status == VmStatus::Success) {
            world_ = res.world;
            receipt.contract_address = res.created;
            for (const auto& event : res.trace.events)
                if (const auto* w = std::get_if<evm::StorageWrite>(&event))
                    mined.writes.push_back(*w);
        }
    } else {
        const auto res =
            evm::execute_message(world_, tx.from, *tx.to, view(tx.data), budget, schedule_);
        status = res.status;
        receipt.gas_used = intrinsic + res.gas_used;
        if (res.status == VmStatus::Success) {
            world_ = res.world;
            for (const auto& event : res.trace.events)
                if (const auto* w = std::get_if<evm::StorageWrite>(&event))
                    mined.writes.push_back(*w);
        }
    }
    receipt.success = status == VmStatus::Success;
    world_.get_or_create(tx.from).nonce = nonce + 1;

    mined.record.entry = reconstruct::JournalEntry{
        tx.from, tx.to, tx.data, tx.gas, nonce, receipt.block, receipt.success};
    blocks_.push_back({std::move(mined)});
    return blocks_.back().front().record.receipt;
}

void EmbeddedChain::save(const std::filesystem::path& path) const {
    json accounts = json::object();
    for (const auto& [address, state] : world_.accounts) {
        json storage = json::object();
        for (const auto& [key, value] : state.storage)
            storage[word_to_hex(key)] = word_to_hex(value);
        accounts[to_hex(address)] = json{{"nonce", state.nonce},
                                         {"balance", word_to_hex(state.balance)},
                                         {"code", to_hex(view(state.code))},
                                         {"storage", std::move(storage)}};
    }
    json destroyed = json::array();
    for (const Address& address : world_.destroyed)
        destroyed.push_back(to_hex(address));

    json blocks = json::array();
    for (const auto& block : blocks_) {
        json txs = json::array();
        for (const MinedTransaction& mined : block) {
            json writes = json::array();
            for (const evm::StorageWrite& w : mined.writes)
                writes.push_back(
                    json::array({to_hex(w.address), word_to_hex(w.key), word_to_hex(w.value)}));
            json tx = reconstruct::journal_entry_to_json(mined.record.entry);
            tx["gas_used"] = mined.record.receipt.gas_used;
            tx["hash"] = to_hex(mined.record.receipt.tx_hash);
            tx["contract_address"] = mined.record.receipt.contract_address
                                         ? json(to_hex(*mined.record.receipt.contract_address))
                                         : json(nullptr);
            tx["writes"] = std::move(writes);
            txs.push_back(std::move(tx));
        }
        blocks.push_back(std::move(txs));
    }

    const json doc{{"schedule", schedule_to_json(schedule_)},
                   {"accounts", std::move(accounts)},
                   {"destroyed", std::move(destroyed)},
                   {"blocks", std::move(blocks)}};
    std::ofstream out(path);
    if (!out)
        throw ChainError{"cannot write world state file " + path.string()};
    out << doc.dump(1) << '\n';
}

EmbeddedChain EmbeddedChain::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ChainError{"cannot open world state file " + path.string()};
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ChainError{"world state file " + path.string() + ": " + e.what()};
    }

    EmbeddedChain chain(schedule_from_json(doc.value("schedule", json::object())));
    for (const auto& [address_hex, state] : doc.value("accounts", json::object()).items()) {
        const auto address = address_from_hex(address_hex);
        if (!address)
            throw ChainError{"world state: bad account address " + address_hex};
        evm::AccountState account;
        account.nonce = state.value("nonce", uint64_t{0});
        account.balance = word_from_hex(state.value("balance", std::string{"0x0"})).value_or(0);
        const auto code = from_hex(state.value("code", std::string{"0x"}));
        if (!code)
            throw ChainError{"world state: bad code hex for " + address_hex};
        account.code = *code;
        for (const auto& [k, v] : state.value("storage", json::object()).items()) {
            const auto key = word_from_hex(k);
            const auto value = word_from_hex(v.get<std::string>());
            if (!key || !value || *value == 0)
                throw ChainError{"world state: bad storage entry for " + address_hex};
            account.storage[*key] = *value;
        }
        chain.world_.accounts[*address] = std::move(account);
    }
    for (const auto& d : doc.value("destroyed", json::array()))
        chain.world_.destroyed.insert(address_from_json(d));

    for (const auto& block : doc.value("blocks", json::array())) {
        std::vector<MinedTransaction> txs;
        for (const auto& tx : block) {
            MinedTransaction mined;
            mined.record.entry = reconstruct::journal_entry_from_json(tx);
            mined.record.receipt.success = mined.record.entry.status.value_or(false);
            mined.record.receipt.block = mined.record.entry.block;
            mined.record.receipt.index = txs.size();
            mined.record.receipt.gas_used = tx.value("gas_used", uint64_t{0});
            if (tx.contains("hash")) {
                const auto h = hash_from_hex(tx.at("hash").get<std::string>());
                if (h)
                    mined.record.receipt.tx_hash = *h;
            }
            if (tx.contains("contract_address") && !tx.at("contract_address").is_null())
                mined.record.receipt.contract_address = address_from_json(tx.at("contract_address"));
            for (const auto& w : tx.value("writes", json::array())) {
                evm::StorageWrite write;
                write.address = address_from_json(w.at(0));
                write.key = *word_from_hex(w.at(1).get<std::string>());
                write.value = *word_from_hex(w.at(2).get<std::string>());
                mined.writes.push_back(write);
            }
            txs.push_back(std::move(mined));
        }
        chain.blocks_.push_back(std::move(txs));
    }
    return chain;
}

}  // namespace evmport::chain
