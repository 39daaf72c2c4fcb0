// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/bytes.hpp>

#include <stdexcept>
#include <vector>

namespace evmport::rlp {

struct MalformedRlp : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TrailingBytes : MalformedRlp {
    TrailingBytes() : MalformedRlp("rlp: trailing bytes after item") {}
};
struct SizeOverflow : std::runtime_error {
    SizeOverflow() : std::runtime_error("rlp: item exceeds the 2^32-byte bound") {}
};

/// Either a byte-string leaf or an ordered list of items.
class Item {
  public:
    Item() = default;
    Item(Bytes str) : str_(std::move(str)) {}
    Item(std::vector<Item> items) : is_list_(true), items_(std::move(items)) {}

    static Item string(Bytes b) { return Item{std::move(b)}; }
    static Item string(ByteView b) { return Item{Bytes{b}}; }
    static Item list(std::vector<Item> items = {}) { return Item{std::move(items)}; }

    /// Minimal big-endian integer; zero encodes as the empty string.
    static Item integer(uint64_t n);

    bool is_list() const noexcept { return is_list_; }
    const Bytes& str() const { return str_; }
    const std::vector<Item>& items() const { return items_; }
    std::vector<Item>& items() { return items_; }

    bool operator==(const Item& other) const = default;

  private:
    bool is_list_ = false;
    Bytes str_;
    std::vector<Item> items_;
};

Bytes encode(const Item& item);

/// Convenience encoders for the common single-value cases.
Bytes encode_string(ByteView payload);
Bytes encode_integer(uint64_t n);

/// Strict decode: canonical length forms only, whole input must be consumed.
Item decode(ByteView data);

}  // namespace evmport::rlp
