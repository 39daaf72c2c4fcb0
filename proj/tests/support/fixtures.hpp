// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/bytes.hpp>
#include <evmport/word.hpp>

#include <nlohmann/json.hpp>

#include <string>

namespace evmport::test {

/// Loads a JSON fixture emitted by tests/oracle/gen_fixtures.py.
nlohmann::json load_fixture(const std::string& name);

Bytes hx(const std::string& hex);
Hash32 hx32(const std::string& hex);
Address hxaddr(const std::string& hex);
Word hxword(const std::string& hex);

}  // namespace evmport::test
