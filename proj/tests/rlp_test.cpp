// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/encoding/rlp.hpp>

#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

namespace evmport::rlp {

using test::hx;
using test::load_fixture;

namespace {

Item item_from_json(const nlohmann::json& j) {
    if (j.contains("str"))
        return Item::string(hx(j.at("str")));
    std::vector<Item> items;
    for (const auto& child : j.at("list"))
        items.push_back(item_from_json(child));
    return Item::list(std::move(items));
}

Item random_item(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 1);
    if (kind(rng) >= 2) {
        std::uniform_int_distribution<int> n_children(0, 4);
        std::vector<Item> items;
        const int n = n_children(rng);
        for (int i = 0; i < n; ++i)
            items.push_back(random_item(rng, depth - 1));
        return Item::list(std::move(items));
    }
    std::uniform_int_distribution<int> len(0, 80);
    std::uniform_int_distribution<int> byte(0, 255);
    Bytes payload;
    const int n = len(rng);
    for (int i = 0; i < n; ++i)
        payload.push_back(static_cast<uint8_t>(byte(rng)));
    return Item::string(std::move(payload));
}

}  // namespace

TEST(rlp, single_byte_encodes_as_itself) {
    EXPECT_EQ(encode_string(hx("0x2a")), hx("0x2a"));
}

TEST(rlp, empty_string) {
    EXPECT_EQ(encode_string({}), hx("0x80"));
}

TEST(rlp, two_element_list) {
    const Item list = Item::list({Item::string(hx("0x01")), Item::string(hx("0x02"))});
    EXPECT_EQ(encode(list), hx("0xc20102"));
}

TEST(rlp, oracle_item_vectors) {
    const auto fixture = load_fixture("rlp_vectors.json");
    for (const auto& c : fixture.at("items")) {
        const Item item = item_from_json(c.at("item"));
        const Bytes expected = hx(c.at("encoded"));
        EXPECT_EQ(encode(item), expected) << c.at("note");
        EXPECT_EQ(decode(view(expected)), item) << c.at("note");
    }
}

TEST(rlp, oracle_integer_vectors) {
    const auto fixture = load_fixture("rlp_vectors.json");
    for (const auto& c : fixture.at("integers")) {
        if (c.at("value").is_number_unsigned()) {
            const uint64_t v = c.at("value");
            EXPECT_EQ(encode_integer(v), hx(c.at("encoded"))) << v;
        }
    }
}

TEST(rlp, decode_rejects_invalid_encodings) {
    const auto fixture = load_fixture("rlp_vectors.json");
    for (const auto& c : fixture.at("invalid")) {
        const Bytes data = hx(c.at("encoded"));
        EXPECT_THROW(decode(view(data)), MalformedRlp) << c.at("note");
    }
}

TEST(rlp, decode_rejects_trailing_bytes) {
    EXPECT_THROW(decode(view(hx("0x2a2a"))), TrailingBytes);
    EXPECT_THROW(decode(view(hx("0xc0c0"))), TrailingBytes);
}

TEST(rlp, decode_of_truncated_list) {
    EXPECT_THROW(decode(view(hx("0xc201"))), MalformedRlp);
}

TEST(rlp, round_trip_random_trees) {
    std::mt19937 rng(0x5eed);
    for (int i = 0; i < 500; ++i) {
        const Item item = random_item(rng, 4);
        const Bytes encoded = encode(item);
        ASSERT_LE(encoded.size(), 4096u * 4);
        EXPECT_EQ(decode(view(encoded)), item);
    }
}

TEST(rlp, integer_zero_is_empty_string) {
    EXPECT_EQ(encode_integer(0), hx("0x80"));
    EXPECT_TRUE(Item::integer(0).str().empty());
}

}  // namespace evmport::rlp
