// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/chain/embedded.hpp>

namespace evmport::demo {

/// Two-contract scenario: a dependency whose state is set by direct
/// transactions, and a three-variable contract whose constructor wires a
/// dynamic reference to it. Includes one failing transaction so journals
/// carry a skipped entry.
struct Scenario {
    Address deployer{};
    Address user{};
    Address referenced{};
    Address simple{};
};

Scenario seed_source_chain(chain::EmbeddedChain& chain);

}  // namespace evmport::demo
