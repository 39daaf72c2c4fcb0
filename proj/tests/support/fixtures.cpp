// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support/fixtures.hpp"

#include <fstream>
#include <stdexcept>

namespace evmport::test {

nlohmann::json load_fixture(const std::string& name) {
    const std::string path = std::string{EVMPORT_FIXTURE_DIR} + "/" + name;
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error{"missing fixture (run tests/oracle/gen_fixtures.py): " + path};
    return nlohmann::json::parse(in);
}

Bytes hx(const std::string& hex) {
    const auto b = from_hex(hex);
    if (!b)
        throw std::runtime_error{"bad hex in fixture: " + hex};
    return *b;
}

Hash32 hx32(const std::string& hex) {
    const auto h = hash_from_hex(hex);
    if (!h)
        throw std::runtime_error{"bad hash hex in fixture: " + hex};
    return *h;
}

Address hxaddr(const std::string& hex) {
    const auto a = address_from_hex(hex);
    if (!a)
        throw std::runtime_error{"bad address hex in fixture: " + hex};
    return *a;
}

Word hxword(const std::string& hex) {
    const auto w = word_from_hex(hex);
    if (!w)
        throw std::runtime_error{"bad word hex in fixture: " + hex};
    return *w;
}

}  // namespace evmport::test
