// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/codegen/deploy.hpp>
#include <evmport/codegen/proxy.hpp>

#include <evmport/codegen/assembler.hpp>
#include <evmport/encoding/keccak.hpp>
#include <evmport/evm/interpreter.hpp>
#include <evmport/samples.hpp>
#include <evmport/trie/trie.hpp>

#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

namespace evmport::codegen {

using evm::GasSchedule;
using evm::VmStatus;
using evm::WorldState;
using test::hx;
using test::hxaddr;
using test::load_fixture;

namespace {

const Address kDeployer{0xde, 0x10, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
                        0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x01};
const Address kUser{0xde, 0x10, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
                    0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x02};

StateSnapshot snapshot_of(std::initializer_list<std::pair<uint64_t, uint64_t>> pairs) {
    StateSnapshot snapshot;
    for (const auto& [k, v] : pairs)
        snapshot.entries.emplace(Word{k}, Word{v});
    return snapshot;
}

StorageMap storage_at(const WorldState& world, const Address& address) {
    const auto* account = world.find(address);
    return account ? account->storage : StorageMap{};
}

}  // namespace

TEST(codegen, byte_length_rules) {
    EXPECT_EQ(byte_length(Word{0}), 1u);
    EXPECT_EQ(byte_length(Word{0xff}), 1u);
    EXPECT_EQ(byte_length(Word{0x100}), 2u);
    EXPECT_EQ(byte_length(~Word{0}), 32u);
}

TEST(codegen, push_opcode_range) {
    EXPECT_EQ(push_opcode(1), 0x60);
    EXPECT_EQ(push_opcode(20), 0x73);
    EXPECT_EQ(push_opcode(32), 0x7f);
    EXPECT_THROW(push_opcode(0), OutOfRange);
    EXPECT_THROW(push_opcode(33), OutOfRange);
}

TEST(codegen, store_sequence_bytes) {
    EXPECT_EQ(store_sequence(snapshot_of({{0x01, 0x2a}})), hx("0x602a600155"));
    EXPECT_EQ(store_sequence(StateSnapshot{}), Bytes{});
    // Ascending key order regardless of insertion order.
    StateSnapshot s;
    s.entries[Word{0x100}] = Word{1};
    s.entries[Word{2}] = Word{3};
    EXPECT_EQ(store_sequence(s), hx("0x6003600255" "600161010055"));
}

TEST(codegen, store_sequence_executes_to_exact_snapshot) {
    std::mt19937 rng(0xc0de);
    std::uniform_int_distribution<uint64_t> dist(1, 1'000'000);
    const GasSchedule schedule;
    for (int round = 0; round < 20; ++round) {
        StateSnapshot snapshot;
        for (int i = 0; i < 24; ++i)
            snapshot.entries[Word{dist(rng)}] = Word{dist(rng)};

        Bytes code{kDeployPreamble, kDeployPreambleSize};
        code += store_sequence(snapshot);
        code += Bytes{0x00};

        WorldState world;
        world.get_or_create(kUser).code = code;
        const auto res = evm::execute_message(world, kDeployer, kUser, {}, 7'000'000, schedule);
        ASSERT_EQ(res.status, VmStatus::Success);
        EXPECT_EQ(storage_at(res.world, kUser), snapshot.entries);
    }
}

TEST(codegen, deploy_code_starts_with_fixed_preamble) {
    const GasSchedule schedule;
    const auto artifact =
        generate_deploy_code(snapshot_of({{1, 42}}), view(hx("0x00")), schedule);
    const Bytes preamble = hx("0x608060405234801561001057600080fd5b50");
    ASSERT_GE(artifact.deploy_code.size(), preamble.size());
    EXPECT_EQ(artifact.deploy_code.substr(0, preamble.size()), preamble);
}

TEST(codegen, empty_snapshot_deploy_round_trip) {
    const GasSchedule schedule;
    const Bytes runtime = hx("0x00");
    const auto artifact = generate_deploy_code(StateSnapshot{}, view(runtime), schedule);

    WorldState world;
    const auto res = evm::execute_deploy(world, kDeployer, view(artifact.deploy_code),
                                         schedule.block_gas_limit, schedule);
    ASSERT_EQ(res.status, VmStatus::Success);
    EXPECT_EQ(res.world.code_at(res.created), runtime);
    EXPECT_TRUE(storage_at(res.world, res.created).empty());
    EXPECT_EQ(trie::secure_storage_root(storage_at(res.world, res.created)),
              artifact.expected_root);
}

TEST(codegen, deploy_round_trip_random_snapshots) {
    std::mt19937 rng(0xa5a5);
    const GasSchedule schedule;
    for (int round = 0; round < 30; ++round) {
        StateSnapshot snapshot;
        std::uniform_int_distribution<int> n_entries(0, 64);
        std::uniform_int_distribution<int> n_code(0, 256);
        const int entries = n_entries(rng);
        for (int i = 0; i < entries; ++i) {
            Word key = 0, value = 0;
            for (int limb = 0; limb < 4; ++limb) {
                key = (key << 64) | Word{rng()};
                value = (value << 64) | Word{rng()};
            }
            if (value == 0)
                value = 1;
            snapshot.entries[key] = value;
        }
        Bytes runtime;
        const int code_len = n_code(rng);
        for (int i = 0; i < code_len; ++i)
            runtime.push_back(static_cast<uint8_t>(rng()));

        const auto artifact = generate_deploy_code(snapshot, view(runtime), schedule);
        WorldState world;
        const auto res = evm::execute_deploy(world, kDeployer, view(artifact.deploy_code),
                                             schedule.block_gas_limit, schedule);
        ASSERT_EQ(res.status, VmStatus::Success);
        EXPECT_EQ(res.world.code_at(res.created), runtime);
        EXPECT_EQ(storage_at(res.world, res.created), snapshot.entries);
        EXPECT_EQ(trie::secure_storage_root(storage_at(res.world, res.created)),
                  artifact.expected_root);
    }
}

TEST(codegen, gas_estimate_is_exact_for_this_model) {
    std::mt19937 rng(0x9a5);
    const GasSchedule schedule;
    for (int round = 0; round < 10; ++round) {
        StateSnapshot snapshot;
        std::uniform_int_distribution<uint64_t> dist(1, ~uint64_t{0});
        std::uniform_int_distribution<int> n_entries(0, 32);
        const int entries = n_entries(rng);
        for (int i = 0; i < entries; ++i)
            snapshot.entries[Word{dist(rng)}] = Word{dist(rng)};
        Bytes runtime(static_cast<size_t>(rng() % 100), 0x5b);

        const auto artifact = generate_deploy_code(snapshot, view(runtime), schedule);
        const uint64_t intrinsic = evm::intrinsic_gas(schedule, view(artifact.deploy_code));

        WorldState world;
        const auto res = evm::execute_deploy(world, kDeployer, view(artifact.deploy_code),
                                             schedule.block_gas_limit, schedule);
        ASSERT_EQ(res.status, VmStatus::Success);
        EXPECT_EQ(intrinsic + res.gas_used, artifact.gas_estimate);
    }
}

TEST(codegen, oversized_snapshot_signals_proxy_strategy) {
    const GasSchedule schedule;
    StateSnapshot snapshot;
    for (uint64_t i = 0; i < 759; ++i)
        snapshot.entries[Word{i + 1}] = Word{i + 100};
    EXPECT_THROW(generate_deploy_code(snapshot, view(hx("0x00")), schedule), GasLimitExceeded);
    try {
        generate_deploy_code(snapshot, view(hx("0x00")), schedule);
    } catch (const GasLimitExceeded& e) {
        EXPECT_GT(e.estimate, uint64_t{8'000'000});
        EXPECT_EQ(e.limit, uint64_t{8'000'000});
    }
}

TEST(codegen, precompute_address_matches_published_vectors) {
    const auto fixture = load_fixture("keccak_vectors.json");
    for (const auto& c : fixture.at("create_addresses")) {
        const Address sender = hxaddr(c.at("sender"));
        const uint64_t nonce = c.at("nonce");
        EXPECT_EQ(to_hex(precompute_address(sender, nonce)), c.at("address"));
    }
}

TEST(codegen, precompute_address_agrees_with_interpreter) {
    const GasSchedule schedule;
    std::mt19937 rng(77);
    for (int round = 0; round < 10; ++round) {
        Address sender;
        for (auto& b : sender)
            b = static_cast<uint8_t>(rng());
        const uint64_t nonce = rng() % 1000;
        WorldState world;
        world.get_or_create(sender).nonce = nonce;
        const auto res =
            evm::execute_deploy(world, sender, view(hx("0x60006000f3")), 100'000, schedule);
        ASSERT_EQ(res.status, VmStatus::Success);
        EXPECT_EQ(res.created, precompute_address(sender, nonce));
    }
    // Distinct nonces yield distinct addresses.
    EXPECT_NE(precompute_address(kDeployer, 0), precompute_address(kDeployer, 1));
}

TEST(codegen, chunk_plan_shapes) {
    const GasSchedule schedule;
    EXPECT_TRUE(chunk_state(StateSnapshot{}, schedule).chunks.empty());
    EXPECT_EQ(chunk_state(snapshot_of({{1, 2}}), schedule).chunks.size(), 1u);

    StateSnapshot big;
    for (uint64_t i = 0; i < 759; ++i)
        big.entries[Word{i + 1}] = Word{i + 100};
    const ChunkPlan plan = chunk_state(big, schedule);
    EXPECT_GE(plan.chunks.size(), 2u);
    EXPECT_LE(plan.per_chunk_gas, schedule.block_gas_limit);

    // Chunks are disjoint, ordered and cover the snapshot exactly.
    StorageMap merged;
    Word last_key = 0;
    bool first = true;
    for (const auto& chunk : plan.chunks) {
        EXPECT_LE(estimate_load_gas(chunk.size(), schedule), schedule.block_gas_limit);
        for (const auto& [k, v] : chunk) {
            EXPECT_TRUE(first || k > last_key);
            first = false;
            last_key = k;
            EXPECT_TRUE(merged.emplace(k, v).second);
        }
    }
    EXPECT_EQ(merged, big.entries);
}

TEST(codegen, chunking_impossible_when_one_pair_exceeds_limit) {
    GasSchedule schedule;
    schedule.block_gas_limit = 30'000;  // below even a single store's cost
    EXPECT_THROW(chunk_state(snapshot_of({{1, 2}}), schedule), ChunkingImpossible);
}

TEST(codegen, sample_selectors_match_keccak) {
    const auto constants = load_fixture("contract_constants.json").at("selectors");
    const auto expect_sel = [&](const char* sig, uint32_t value) {
        EXPECT_EQ(constants.at(sig).get<std::string>(),
                  to_hex(view(word_to_bytes32(Word{value})).substr(28, 4)))
            << sig;
    };
    expect_sel("setA(uint256)", samples::kSetASelector);
    expect_sel("setB(uint256,uint256)", samples::kSetBSelector);
    expect_sel("setRefVar(uint256)", samples::kSetRefVarSelector);
    expect_sel("setVar(uint256)", samples::kSetVarSelector);
    expect_sel("getVar()", samples::kGetVarSelector);
    expect_sel("increment()", samples::kIncrementSelector);
    expect_sel("get()", samples::kGetSelector);
    expect_sel("finalize()", kFinalizeSelector);
}

TEST(codegen, selector_dispatch_reaches_intended_branch) {
    const GasSchedule schedule;
    WorldState world;
    world.get_or_create(kUser).code = samples::referenced_runtime();

    auto res = evm::execute_message(
        world, kDeployer, kUser, view(samples::encode_call(samples::kSetVarSelector, {Word{7}})),
        1'000'000, schedule);
    ASSERT_EQ(res.status, VmStatus::Success);
    EXPECT_EQ(storage_at(res.world, kUser).at(Word{0}), Word{7});

    res = evm::execute_message(world, kDeployer, kUser,
                               view(samples::encode_call(samples::kGetVarSelector)), 1'000'000,
                               schedule);
    ASSERT_EQ(res.status, VmStatus::Success);
    // Unknown selectors revert.
    res = evm::execute_message(world, kDeployer, kUser, view(hx("0xdeadbeef")), 1'000'000,
                               schedule);
    EXPECT_EQ(res.status, VmStatus::Revert);
}

namespace {

struct ProxyFixture {
    WorldState world;
    ProxyArtifactSet set;
    GasSchedule schedule;
    uint64_t load_gas_spent = 0;
};

/// Deploys the triple and runs all load transactions plus finalize.
ProxyFixture run_proxy_migration(const StateSnapshot& snapshot, const GasSchedule& schedule) {
    ProxyFixture fx;
    fx.schedule = schedule;
    fx.world.get_or_create(kDeployer).nonce = 5;
    fx.set = generate_proxy_set(snapshot, samples::counter_runtime(), kDeployer, 5, schedule);

    for (const Bytes* deploy :
         {&fx.set.logic_deploy, &fx.set.init_deploy, &fx.set.proxy_deploy}) {
        const auto res = evm::execute_deploy(fx.world, kDeployer, view(*deploy),
                                             schedule.block_gas_limit, schedule);
        EXPECT_EQ(res.status, VmStatus::Success);
        fx.world = res.world;
    }
    EXPECT_EQ(fx.world.code_at(fx.set.predicted_addresses.logic), samples::counter_runtime());
    EXPECT_FALSE(fx.world.code_at(fx.set.predicted_addresses.init).empty());
    EXPECT_FALSE(fx.world.code_at(fx.set.predicted_addresses.proxy).empty());

    for (const Bytes& payload : fx.set.load_transactions) {
        const uint64_t intrinsic = evm::intrinsic_gas(schedule, view(payload));
        const auto res =
            evm::execute_message(fx.world, kDeployer, fx.set.predicted_addresses.init,
                                 view(payload), schedule.block_gas_limit - intrinsic, schedule);
        EXPECT_EQ(res.status, VmStatus::Success);
        EXPECT_LE(intrinsic + res.gas_used, fx.set.chunk_plan.per_chunk_gas);
        fx.load_gas_spent += intrinsic + res.gas_used;
        fx.world = res.world;
    }

    const auto fin = evm::execute_message(fx.world, kDeployer, fx.set.predicted_addresses.init,
                                          view(fx.set.finalize_transaction), 1'000'000, schedule);
    EXPECT_EQ(fin.status, VmStatus::Success);
    fx.world = fin.world;
    return fx;
}

}  // namespace

TEST(codegen, proxy_lifecycle_loads_state_and_destroys_init) {
    GasSchedule schedule;
    schedule.block_gas_limit = 300'000;  // force several chunks at small scale

    StateSnapshot snapshot;
    snapshot.entries[Word{0}] = Word{41};
    for (uint64_t i = 1; i < 40; ++i)
        snapshot.entries[Word{i * 1000}] = Word{i};

    ProxyFixture fx = run_proxy_migration(snapshot, schedule);
    EXPECT_GE(fx.set.load_transactions.size(), 2u);

    const Address proxy = fx.set.predicted_addresses.proxy;
    const Address init = fx.set.predicted_addresses.init;

    // (a) storage root equality with the source snapshot
    EXPECT_EQ(trie::secure_storage_root(storage_at(fx.world, proxy)),
              trie::secure_storage_root(snapshot));

    // (b) the init account is gone
    EXPECT_TRUE(fx.world.destroyed.contains(init));
    EXPECT_TRUE(fx.world.code_at(init).empty());

    // (c) post-finalize guarded store attempts revert without effect. The
    // init address itself cannot originate transactions once destroyed;
    // the chain layer enforces that, so it is not in this list.
    const Bytes attack = fx.set.load_transactions.front();
    for (const Address& attacker : {kUser, kDeployer}) {
        const auto res =
            evm::execute_message(fx.world, attacker, proxy, view(attack), 1'000'000, schedule);
        EXPECT_EQ(res.status, VmStatus::Revert);
        EXPECT_EQ(storage_at(res.world, proxy), storage_at(fx.world, proxy));
    }

    // (d) fallback delegatecalls the logic against proxy storage
    const auto inc = evm::execute_message(fx.world, kUser, proxy,
                                          view(samples::encode_call(samples::kIncrementSelector)),
                                          1'000'000, schedule);
    ASSERT_EQ(inc.status, VmStatus::Success);
    EXPECT_EQ(storage_at(inc.world, proxy).at(Word{0}), Word{42});
    // Logic contract's own storage stays untouched.
    EXPECT_TRUE(storage_at(inc.world, fx.set.predicted_addresses.logic).empty());

    // Return data is forwarded through the proxy.
    const auto get = evm::execute_message(inc.world, kUser, proxy,
                                          view(samples::encode_call(samples::kGetSelector)),
                                          1'000'000, schedule);
    ASSERT_EQ(get.status, VmStatus::Success);
    EXPECT_EQ(get.return_data, Bytes{view(word_to_bytes32(Word{42}))});
}

TEST(codegen, pre_finalize_loads_require_init_and_deployer) {
    GasSchedule schedule;
    StateSnapshot snapshot = snapshot_of({{0, 41}, {9, 9}});

    WorldState world;
    world.get_or_create(kDeployer).nonce = 0;
    const auto set =
        generate_proxy_set(snapshot, samples::counter_runtime(), kDeployer, 0, schedule);
    for (const Bytes* deploy : {&set.logic_deploy, &set.init_deploy, &set.proxy_deploy}) {
        const auto res = evm::execute_deploy(world, kDeployer, view(*deploy),
                                             schedule.block_gas_limit, schedule);
        ASSERT_EQ(res.status, VmStatus::Success);
        world = res.world;
    }

    const Bytes& payload = set.load_transactions.front();
    // Direct-to-proxy from a non-init caller reverts.
    auto res = evm::execute_message(world, kUser, set.predicted_addresses.proxy, view(payload),
                                    1'000'000, schedule);
    EXPECT_EQ(res.status, VmStatus::Revert);
    // Via init, but from a stranger: the init guard rejects it.
    res = evm::execute_message(world, kUser, set.predicted_addresses.init, view(payload),
                               1'000'000, schedule);
    EXPECT_EQ(res.status, VmStatus::Revert);
    // From the deployer via init it lands.
    res = evm::execute_message(world, kDeployer, set.predicted_addresses.init, view(payload),
                               1'000'000, schedule);
    EXPECT_EQ(res.status, VmStatus::Success);
    EXPECT_EQ(storage_at(res.world, set.predicted_addresses.proxy).size(),
              snapshot.entries.size());
}

TEST(codegen, delegatecall_overhead_is_measured_not_asserted) {
    const GasSchedule schedule;
    StateSnapshot snapshot = snapshot_of({{0, 10}});

    ProxyFixture fx = run_proxy_migration(snapshot, schedule);

    // Standalone counter seeded with the same slot for a like-for-like
    // store cost.
    WorldState plain;
    plain.get_or_create(kUser).nonce = 0;
    const auto artifact =
        generate_deploy_code(snapshot, view(samples::counter_runtime()), schedule);
    const auto dep = evm::execute_deploy(plain, kUser, view(artifact.deploy_code),
                                         schedule.block_gas_limit, schedule);
    ASSERT_EQ(dep.status, VmStatus::Success);

    const Bytes call = samples::encode_call(samples::kIncrementSelector);
    const auto direct =
        evm::execute_message(dep.world, kUser, dep.created, view(call), 1'000'000, schedule);
    ASSERT_EQ(direct.status, VmStatus::Success);
    const auto proxied = evm::execute_message(fx.world, kUser, fx.set.predicted_addresses.proxy,
                                              view(call), 1'000'000, schedule);
    ASSERT_EQ(proxied.status, VmStatus::Success);

    ASSERT_GT(proxied.gas_used, direct.gas_used);
    const uint64_t overhead = proxied.gas_used - direct.gas_used;
    RecordProperty("delegatecall_overhead_gas", static_cast<int>(overhead));
    // Reported, not pinned: the simplified schedule is not the mainnet one.
    EXPECT_LT(overhead, 5'000u);
}

TEST(codegen, assembler_labels_and_fixups) {
    Assembler a;
    a.push_label("end").op(evm::OP_JUMP);
    a.op(evm::OP_STOP);
    a.jumpdest("end");
    const Bytes code = a.build();
    EXPECT_EQ(code, hx("0x61000556005b"));

    Assembler bad;
    bad.push_label("nowhere");
    EXPECT_THROW(bad.build(), std::invalid_argument);

    Assembler dup;
    dup.label("x");
    EXPECT_THROW(dup.label("x"), std::invalid_argument);
}

}  // namespace evmport::codegen
