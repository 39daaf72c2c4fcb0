// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/chain/rpc.hpp>

#include <evmport/chain/embedded.hpp>
#include <evmport/encoding/keccak.hpp>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace evmport::chain {

using nlohmann::json;

namespace {

std::string quantity(uint64_t n) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "0x%llx", static_cast<unsigned long long>(n));
    return buf;
}

uint64_t parse_quantity(const json& j) {
    if (!j.is_string())
        throw TransportError{"rpc: expected a hex quantity"};
    const auto w = word_from_hex(j.get<std::string>());
    if (!w)
        throw TransportError{"rpc: bad hex quantity " + j.get<std::string>()};
    return static_cast<uint64_t>(*w);
}

Address parse_address(const json& j) {
    const auto a = address_from_hex(j.get<std::string>());
    if (!a)
        throw TransportError{"rpc: bad address " + j.get<std::string>()};
    return *a;
}

Bytes parse_bytes(const json& j) {
    const auto b = from_hex(j.get<std::string>());
    if (!b)
        throw TransportError{"rpc: bad hex bytes"};
    return *b;
}

}  // namespace

struct RpcChain::Impl {
    mutable httplib::Client client;
    std::string url;
    mutable uint64_t next_id = 1;

    explicit Impl(const std::string& url_, int timeout) : client(url_), url(url_) {
        client.set_connection_timeout(timeout);
        client.set_read_timeout(timeout);
    }

    json call(const std::string& method, json params) const {
        const json request{
            {"jsonrpc", "2.0"}, {"id", next_id++}, {"method", method}, {"params", params}};
        const auto res = client.Post("/", request.dump(), "application/json");
        if (!res)
            throw EndpointUnreachable{"rpc: no response from " + url + " for " + method};
        if (res->status != 200)
            throw TransportError{"rpc: HTTP " + std::to_string(res->status) + " from " + url};
        json body;
        try {
            body = json::parse(res->body);
        } catch (const json::parse_error& e) {
            throw TransportError{std::string{"rpc: malformed response: "} + e.what()};
        }
        if (body.contains("error")) {
            const auto& error = body.at("error");
            const int code = error.value("code", 0);
            const std::string message = error.value("message", std::string{"unknown error"});
            if (code == -32601)
                throw MethodUnsupported{"rpc: " + method + " unsupported: " + message};
            throw TransportError{"rpc: " + method + " failed: " + message};
        }
        if (!body.contains("result"))
            throw TransportError{"rpc: response lacks a result"};
        return body.at("result");
    }
};

RpcChain::RpcChain(const std::string& url, int timeout_seconds)
    : impl_(std::make_unique<Impl>(url, timeout_seconds)) {
    const json version = impl_->call("web3_clientVersion", json::array());
    client_version_ = version.is_string() ? version.get<std::string>() : "unknown";
}

RpcChain::~RpcChain() = default;
RpcChain::RpcChain(RpcChain&&) noexcept = default;
RpcChain& RpcChain::operator=(RpcChain&&) noexcept = default;

std::string RpcChain::describe() const {
    return "rpc endpoint " + impl_->url + " (" + client_version_ + ")";
}

uint64_t RpcChain::block_number() const {
    return parse_quantity(impl_->call("eth_blockNumber", json::array()));
}

Bytes RpcChain::get_code(const Address& address) const {
    return parse_bytes(impl_->call("eth_getCode", json::array({to_hex(address), "latest"})));
}

uint64_t RpcChain::get_nonce(const Address& address) const {
    return parse_quantity(
        impl_->call("eth_getTransactionCount", json::array({to_hex(address), "latest"})));
}

std::optional<trie::Account> RpcChain::get_account(const Address& address) const {
    trie::Account account;
    account.nonce = get_nonce(address);
    account.balance =
        word_from_hex(impl_->call("eth_getBalance", json::array({to_hex(address), "latest"}))
                          .get<std::string>())
            .value_or(Word{0});
    const Bytes code = get_code(address);
    account.code_hash = keccak256(code);
    account.storage_root = get_storage_root(address);
    return account;
}

std::optional<Word> RpcChain::get_storage_at(const Address& address, const Word& key) const {
    const json result = impl_->call(
        "eth_getStorageAt", json::array({to_hex(address), word_to_hex(key), "latest"}));
    return word_from_hex(result.get<std::string>());
}

std::optional<StorageMap> RpcChain::get_storage(const Address&) const {
    // Standard nodes cannot enumerate pre-hash slots.
    return std::nullopt;
}

Hash32 RpcChain::get_storage_root(const Address& address) const {
    const json result =
        impl_->call("eth_getProof", json::array({to_hex(address), json::array(), "latest"}));
    if (!result.contains("storageHash"))
        throw TransportError{"rpc: eth_getProof result lacks storageHash"};
    const auto hash = hash_from_hex(result.at("storageHash").get<std::string>());
    if (!hash)
        throw TransportError{"rpc: bad storageHash"};
    return *hash;
}

std::vector<RecordedTransaction> RpcChain::block_transactions(uint64_t block) const {
    const json result =
        impl_->call("eth_getBlockByNumber", json::array({quantity(block), true}));
    if (result.is_null())
        throw BlockRangeUnavailable{"rpc: block " + std::to_string(block) + " not found"};
    std::vector<RecordedTransaction> out;
    for (const json& tx : result.value("transactions", json::array())) {
        RecordedTransaction rec;
        rec.entry.from = parse_address(tx.at("from"));
        if (!tx.at("to").is_null())
            rec.entry.to = parse_address(tx.at("to"));
        rec.entry.data = parse_bytes(tx.at("input"));
        rec.entry.gas = parse_quantity(tx.at("gas"));
        rec.entry.nonce = parse_quantity(tx.at("nonce"));
        rec.entry.block = block;

        const auto hash = hash_from_hex(tx.at("hash").get<std::string>());
        if (!hash)
            throw TransportError{"rpc: bad transaction hash"};
        const auto receipt = get_receipt(*hash);
        if (receipt) {
            rec.receipt = *receipt;
            rec.entry.status = receipt->success;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::optional<Receipt> RpcChain::get_receipt(const Hash32& hash) const {
    const json result =
        impl_->call("eth_getTransactionReceipt", json::array({to_hex(hash)}));
    if (result.is_null())
        return std::nullopt;
    Receipt receipt;
    receipt.success = parse_quantity(result.at("status")) == 1;
    receipt.gas_used = parse_quantity(result.value("gasUsed", json("0x0")));
    receipt.block = parse_quantity(result.at("blockNumber"));
    receipt.index = parse_quantity(result.value("transactionIndex", json("0x0")));
    receipt.tx_hash = hash;
    if (result.contains("contractAddress") && !result.at("contractAddress").is_null())
        receipt.contract_address = parse_address(result.at("contractAddress"));
    return receipt;
}

std::optional<RecordedTransaction> RpcChain::get_transaction(const Hash32& hash) const {
    const json result = impl_->call("eth_getTransactionByHash", json::array({to_hex(hash)}));
    if (result.is_null())
        return std::nullopt;
    RecordedTransaction rec;
    rec.entry.from = parse_address(result.at("from"));
    if (!result.at("to").is_null())
        rec.entry.to = parse_address(result.at("to"));
    rec.entry.data = parse_bytes(result.at("input"));
    rec.entry.gas = parse_quantity(result.at("gas"));
    rec.entry.nonce = parse_quantity(result.at("nonce"));
    rec.entry.block = parse_quantity(result.at("blockNumber"));
    const auto receipt = get_receipt(hash);
    if (receipt) {
        rec.receipt = *receipt;
        rec.entry.status = receipt->success;
    }
    return rec;
}

Receipt RpcChain::send_raw_transaction(ByteView raw) {
    const json result = impl_->call("eth_sendRawTransaction", json::array({to_hex(raw)}));
    const auto hash = hash_from_hex(result.get<std::string>());
    if (!hash)
        throw TransportError{"rpc: eth_sendRawTransaction returned a bad hash"};
    const auto receipt = get_receipt(*hash);
    if (!receipt)
        throw TransportError{"rpc: no receipt for sent transaction"};
    return *receipt;
}

Receipt RpcChain::send_transaction(const Transaction& tx) {
    Transaction filled = tx;
    if (!filled.nonce)
        filled.nonce = get_nonce(tx.from);
    return send_raw_transaction(view(encode_raw_transaction(filled)));
}

reconstruct::TraceDiff RpcChain::trace_transaction_hash(const Hash32& hash,
                                                        const Address&) const {
    const json result = impl_->call("debug_traceTransaction", json::array({to_hex(hash)}));
    reconstruct::TraceDiff diff;
    for (const json& log : result.value("structLogs", json::array())) {
        if (log.value("op", std::string{}) != "SSTORE")
            continue;
        // Only the outermost frame writes to the traced contract's own
        // storage; deeper frames belong to other accounts.
        if (log.value("depth", 1) != 1)
            continue;
        const auto& stack = log.at("stack");
        if (!stack.is_array() || stack.size() < 2)
            throw TransportError{"rpc: malformed SSTORE stack in trace"};
        const auto key = word_from_hex(stack[stack.size() - 1].get<std::string>());
        const auto value = word_from_hex(stack[stack.size() - 2].get<std::string>());
        if (!key || !value)
            throw TransportError{"rpc: bad stack words in trace"};
        diff.writes.push_back({*key, *value});
    }
    return diff;
}

reconstruct::TraceDiff RpcChain::trace_transaction(uint64_t block, uint64_t index,
                                                   const Address& contract) const {
    const json result =
        impl_->call("eth_getBlockByNumber", json::array({quantity(block), true}));
    if (result.is_null())
        throw BlockRangeUnavailable{"rpc: block " + std::to_string(block) + " not found"};
    const auto& txs = result.value("transactions", json::array());
    if (index >= txs.size())
        throw TransportError{"rpc: no transaction " + std::to_string(index) + " in block " +
                             std::to_string(block)};
    const auto hash = hash_from_hex(txs[index].at("hash").get<std::string>());
    if (!hash)
        throw TransportError{"rpc: bad transaction hash"};
    return trace_transaction_hash(*hash, contract);
}

}  // namespace evmport::chain
