// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/demo.hpp>

#include <evmport/codegen/deploy.hpp>
#include <evmport/samples.hpp>

namespace evmport::demo {

using chain::Transaction;

Scenario seed_source_chain(chain::EmbeddedChain& chain) {
    Scenario s;
    s.deployer = Address{0xaa, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0x01};
    s.user = Address{0xbb, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0x02};

    const uint64_t deploy_gas = chain.schedule().block_gas_limit;
    const uint64_t call_gas = 1'000'000;

    // Dependency first, driven only by direct transactions so its journal
    // replays to the exact on-chain state.
    const auto ref_deploy = codegen::generate_deploy_code(
        StateSnapshot{}, view(samples::referenced_runtime()), chain.schedule());
    auto receipt = chain.send_transaction(
        Transaction{s.deployer, std::nullopt, ref_deploy.deploy_code, deploy_gas, 0});
    s.referenced = *receipt.contract_address;

    receipt = chain.send_transaction(Transaction{
        s.deployer, std::nullopt, samples::simple_deploy(s.referenced), deploy_gas, 1});
    s.simple = *receipt.contract_address;

    chain.send_transaction(Transaction{
        s.user, s.referenced, samples::encode_call(samples::kSetVarSelector, {Word{7}}),
        call_gas, 0});
    chain.send_transaction(Transaction{
        s.user, s.simple, samples::encode_call(samples::kSetASelector, {Word{100}}), call_gas,
        1});
    chain.send_transaction(Transaction{
        s.user, s.simple, samples::encode_call(samples::kSetASelector, {Word{42}}), call_gas, 2});
    // A call nobody dispatches: recorded as failed, skipped on replay.
    chain.send_transaction(
        Transaction{s.user, s.simple, Bytes{0xde, 0xad, 0xbe, 0xef}, call_gas, 3});
    return s;
}

}  // namespace evmport::demo
