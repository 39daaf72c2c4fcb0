// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/encoding/rlp.hpp>

namespace evmport::rlp {

namespace {

constexpr size_t kSizeLimit = size_t{1} << 32;

Bytes minimal_big_endian(uint64_t n) {
    Bytes out;
    while (n != 0) {
        out.insert(out.begin(), static_cast<uint8_t>(n & 0xff));
        n >>= 8;
    }
    return out;
}

void append_length(Bytes& out, size_t length, uint8_t short_offset) {
    if (length <= 55) {
        out.push_back(static_cast<uint8_t>(short_offset + length));
        return;
    }
    const Bytes len_bytes = minimal_big_endian(length);
    out.push_back(static_cast<uint8_t>(short_offset + 55 + len_bytes.size()));
    out += len_bytes;
}

void encode_to(Bytes& out, const Item& item) {
    if (!item.is_list()) {
        const Bytes& s = item.str();
        if (s.size() >= kSizeLimit)
            throw SizeOverflow{};
        if (s.size() == 1 && s[0] < 0x80) {
            out.push_back(s[0]);
            return;
        }
        append_length(out, s.size(), 0x80);
        out += s;
        return;
    }
    Bytes payload;
    for (const Item& child : item.items())
        encode_to(payload, child);
    if (payload.size() >= kSizeLimit)
        throw SizeOverflow{};
    append_length(out, payload.size(), 0xc0);
    out += payload;
}

struct Cursor {
    ByteView rest;

    uint8_t take() {
        if (rest.empty())
            throw MalformedRlp{"rlp: unexpected end of input"};
        const uint8_t b = rest.front();
        rest.remove_prefix(1);
        return b;
    }

    ByteView take(size_t n) {
        if (rest.size() < n)
            throw MalformedRlp{"rlp: declared length exceeds input"};
        const ByteView out = rest.substr(0, n);
        rest.remove_prefix(n);
        return out;
    }

    size_t take_long_length(size_t length_of_length) {
        const ByteView raw = take(length_of_length);
        if (raw.empty() || raw.front() == 0)
            throw MalformedRlp{"rlp: length-of-length has leading zero"};
        if (length_of_length > sizeof(size_t))
            throw MalformedRlp{"rlp: length too large"};
        size_t n = 0;
        for (uint8_t b : raw)
            n = (n << 8) | b;
        if (n <= 55)
            throw MalformedRlp{"rlp: long form used for short payload"};
        return n;
    }
};

Item decode_item(Cursor& cur) {
    const uint8_t prefix = cur.take();
    if (prefix < 0x80)
        return Item::string(Bytes(1, prefix));
    if (prefix <= 0xb7) {
        const ByteView payload = cur.take(prefix - 0x80u);
        if (payload.size() == 1 && payload[0] < 0x80)
            throw MalformedRlp{"rlp: single byte below 0x80 must encode as itself"};
        return Item::string(payload);
    }
    if (prefix <= 0xbf) {
        const size_t n = cur.take_long_length(prefix - 0xb7u);
        return Item::string(cur.take(n));
    }
    size_t payload_size;
    if (prefix <= 0xf7) {
        payload_size = prefix - 0xc0u;
    } else {
        payload_size = cur.take_long_length(prefix - 0xf7u);
    }
    Cursor inner{cur.take(payload_size)};
    std::vector<Item> items;
    while (!inner.rest.empty())
        items.push_back(decode_item(inner));
    return Item::list(std::move(items));
}

}  // namespace

Item Item::integer(uint64_t n) {
    return Item::string(minimal_big_endian(n));
}

Bytes encode(const Item& item) {
    Bytes out;
    encode_to(out, item);
    return out;
}

Bytes encode_string(ByteView payload) {
    return encode(Item::string(payload));
}

Bytes encode_integer(uint64_t n) {
    return encode(Item::integer(n));
}

Item decode(ByteView data) {
    if (data.empty())
        throw MalformedRlp{"rlp: empty input"};
    Cursor cur{data};
    Item item = decode_item(cur);
    if (!cur.rest.empty())
        throw TrailingBytes{};
    return item;
}

}  // namespace evmport::rlp
