// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/reconstruct/replay.hpp>
#include <evmport/reconstruct/trace_file.hpp>

#include <evmport/create_address.hpp>
#include <evmport/samples.hpp>
#include <evmport/trie/trie.hpp>

#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>

namespace evmport::reconstruct {

using evm::GasSchedule;
using test::hx;
using test::hxword;
using test::load_fixture;

namespace {

const Address kAlice{0xa1, 0x1c, 0xe0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0x01};
const Address kBob{0xb0, 0xb0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0x02};
const Address kRef{0x4e, 0xf0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0x03};

JournalEntry deploy_entry(const Address& from, uint64_t nonce, Bytes data, uint64_t block) {
    return {from, std::nullopt, std::move(data), 7'900'000, nonce, block, std::nullopt};
}

JournalEntry call_entry(const Address& from, const Address& to, Bytes data, uint64_t nonce,
                        uint64_t block) {
    return {from, to, std::move(data), 1'000'000, nonce, block, std::nullopt};
}

}  // namespace

TEST(reconstruct, listing_style_constructor_snapshot) {
    const GasSchedule schedule;
    const TransactionJournal journal{
        deploy_entry(kAlice, 0, samples::simple_deploy(kRef), 10),
    };
    const ReplayResult res = replay_journal(journal, schedule);

    const Word mapping_slot =
        hxword(load_fixture("contract_constants.json").at("mapping_b13_slot"));
    StorageMap expected{
        {Word{0}, Word{42}},
        {mapping_slot, Word{21}},
        {Word{2}, word_from_address(kRef)},
    };
    EXPECT_EQ(res.snapshot.entries, expected);
    EXPECT_EQ(res.runtime_code, samples::simple_runtime());
    EXPECT_EQ(res.snapshot.block_height, 10u);
    EXPECT_TRUE(res.skipped.empty());
}

TEST(reconstruct, zero_write_deletes_slot) {
    const GasSchedule schedule;
    const Address contract = create_address(kAlice, 0);
    const TransactionJournal journal{
        deploy_entry(kAlice, 0, samples::simple_deploy(kRef), 1),
        call_entry(kBob, contract, samples::encode_call(samples::kSetASelector, {Word{7}}), 0, 2),
        call_entry(kBob, contract, samples::encode_call(samples::kSetASelector, {Word{0}}), 1, 3),
    };
    const ReplayResult res = replay_journal(journal, schedule);
    EXPECT_FALSE(res.snapshot.entries.contains(Word{0}));
    EXPECT_TRUE(res.snapshot.entries.contains(Word{2}));
}

TEST(reconstruct, empty_or_headless_journal_is_rejected) {
    const GasSchedule schedule;
    EXPECT_THROW(replay_journal({}, schedule), MissingDeployment);
    const TransactionJournal headless{
        call_entry(kBob, kRef, samples::encode_call(samples::kSetASelector, {Word{1}}), 0, 1)};
    EXPECT_THROW(replay_journal(headless, schedule), MissingDeployment);
}

TEST(reconstruct, failed_transactions_are_skipped) {
    const GasSchedule schedule;
    const Address contract = create_address(kAlice, 0);
    const TransactionJournal journal{
        deploy_entry(kAlice, 0, samples::simple_deploy(kRef), 1),
        call_entry(kBob, contract, hx("0xdeadbeef"), 0, 2),  // unknown selector reverts
        call_entry(kBob, contract, samples::encode_call(samples::kSetASelector, {Word{9}}), 1, 3),
    };
    const ReplayResult res = replay_journal(journal, schedule);
    EXPECT_EQ(res.skipped, std::vector<size_t>{1});
    EXPECT_EQ(res.snapshot.entries.at(Word{0}), Word{9});
}

TEST(reconstruct, marked_successful_failure_diverges) {
    const GasSchedule schedule;
    TransactionJournal journal{
        deploy_entry(kAlice, 0, samples::simple_deploy(kRef), 1),
        call_entry(kBob, create_address(kAlice, 0), hx("0xdeadbeef"), 0, 2),
    };
    journal[1].status = true;
    EXPECT_THROW(replay_journal(journal, schedule), ReplayDivergence);
}

TEST(reconstruct, internal_calls_to_absent_contracts_are_noops) {
    const GasSchedule schedule;
    const Address contract = create_address(kAlice, 0);
    const TransactionJournal journal{
        deploy_entry(kAlice, 0, samples::simple_deploy(kRef), 1),
        call_entry(kBob, contract, samples::encode_call(samples::kSetRefVarSelector, {Word{5}}),
                   0, 2),
    };
    const ReplayResult res = replay_journal(journal, schedule);
    EXPECT_TRUE(res.skipped.empty());
    // The relayed write targets the referenced contract, not this one.
    EXPECT_EQ(res.snapshot.entries.size(), 3u);
}

TEST(reconstruct, replay_is_deterministic_and_matches_world_storage) {
    const GasSchedule schedule;
    const Address contract = create_address(kAlice, 0);
    const TransactionJournal journal{
        deploy_entry(kAlice, 0, samples::simple_deploy(kRef), 1),
        call_entry(kBob, contract, samples::encode_call(samples::kSetBSelector, {Word{5}, Word{6}}),
                   0, 2),
        call_entry(kBob, contract, samples::encode_call(samples::kSetASelector, {Word{1}}), 1, 3),
    };
    const ReplayResult a = replay_journal(journal, schedule);
    const ReplayResult b = replay_journal(journal, schedule);
    EXPECT_EQ(a.snapshot, b.snapshot);
    EXPECT_EQ(snapshot_root(a.snapshot), snapshot_root(b.snapshot));

    // Source equality: the folded snapshot equals the replay world's
    // account storage, and the roots agree.
    EXPECT_EQ(a.snapshot.entries, a.world.find(contract)->storage);
    EXPECT_EQ(snapshot_root(a.snapshot), a.world.account_summary(contract).storage_root);
}

TEST(reconstruct, prefix_replay_plus_remaining_diffs_equals_full_replay) {
    const GasSchedule schedule;
    const Address contract = create_address(kAlice, 0);
    TransactionJournal journal{deploy_entry(kAlice, 0, samples::simple_deploy(kRef), 1)};
    std::mt19937 rng(21);
    for (uint64_t i = 0; i < 12; ++i) {
        const Word key{rng() % 6};
        const Word value{rng() % 4};  // zeros exercise deletion
        journal.push_back(call_entry(
            kBob, contract, samples::encode_call(samples::kSetBSelector, {key, value}), i, i + 2));
    }
    const ReplayResult full = replay_journal(journal, schedule);

    for (const size_t cut : {size_t{1}, size_t{5}, journal.size() - 1}) {
        const TransactionJournal prefix(journal.begin(),
                                        journal.begin() + static_cast<ptrdiff_t>(cut));
        const ReplayResult head = replay_journal(prefix, schedule);
        const std::vector<TraceDiff> tail(full.diffs.begin() + static_cast<ptrdiff_t>(cut),
                                          full.diffs.end());
        const StateSnapshot stitched = apply_diffs(head.snapshot, tail);
        EXPECT_EQ(stitched.entries, full.snapshot.entries) << "cut at " << cut;
    }
}

TEST(reconstruct, apply_diffs_folds_left) {
    StateSnapshot base;
    const std::vector<TraceDiff> diffs{{{{Word{1}, Word{5}}}}, {{{Word{1}, Word{9}}}}};
    EXPECT_EQ(apply_diffs(base, diffs).entries, (StorageMap{{Word{1}, Word{9}}}));

    base.entries[Word{1}] = Word{9};
    const std::vector<TraceDiff> del{{{{Word{1}, Word{0}}}}};
    EXPECT_TRUE(apply_diffs(base, del).entries.empty());
}

TEST(reconstruct, apply_diffs_matches_map_fold_oracle) {
    std::mt19937 rng(1000);
    StateSnapshot base;
    std::vector<TraceDiff> diffs;
    StorageMap oracle;
    for (int tx = 0; tx < 1000; ++tx) {
        TraceDiff diff;
        const int writes = static_cast<int>(rng() % 4);
        for (int w = 0; w < writes; ++w) {
            const Word key{rng() % 32};
            const Word value{rng() % 5};
            diff.writes.push_back({key, value});
            if (value == 0)
                oracle.erase(key);
            else
                oracle[key] = value;
        }
        diffs.push_back(std::move(diff));
    }
    EXPECT_EQ(apply_diffs(base, diffs).entries, oracle);
}

TEST(reconstruct, snapshot_root_matches_trie_fixture) {
    StateSnapshot s;
    EXPECT_EQ(snapshot_root(s), trie::empty_trie_root());
    s.entries[Word{0}] = Word{42};
    EXPECT_EQ(to_hex(snapshot_root(s)),
              "0x81d1fa699f807735499cf6f7df860797cf66f6a66b565cfcda3fae3521eb6861");
}

TEST(reconstruct, trace_file_round_trip_and_errors) {
    const auto dir = std::filesystem::temp_directory_path() / "evmport_trace_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "trace.json";

    {
        std::ofstream out(path);
        out << R"([[{"key":"0x00","value":"0x2a"}]])";
    }
    auto diffs = ingest_trace_file(path);
    ASSERT_EQ(diffs.size(), 1u);
    ASSERT_EQ(diffs[0].writes.size(), 1u);
    EXPECT_EQ(diffs[0].writes[0].key, Word{0});
    EXPECT_EQ(diffs[0].writes[0].value, Word{42});

    {
        std::ofstream out(path);
        out << "[]";
    }
    EXPECT_TRUE(ingest_trace_file(path).empty());

    {
        std::ofstream out(path);
        out << R"([[{"key":"0xzz","value":"0x01"}]])";
    }
    EXPECT_THROW(ingest_trace_file(path), ParseError);

    {
        std::ofstream out(path);
        out << R"([[{"key":"0x01"}]])";
    }
    EXPECT_THROW(ingest_trace_file(path), ParseError);

    // Writer/reader round trip.
    std::vector<TraceDiff> expected{{{{Word{5}, Word{7}}, {Word{1}, Word{0}}}}, {}};
    save_trace_file(path, expected);
    EXPECT_EQ(ingest_trace_file(path), expected);
    std::filesystem::remove_all(dir);
}

TEST(reconstruct, journal_json_round_trip_and_errors) {
    TransactionJournal journal{
        deploy_entry(kAlice, 0, hx("0x600055"), 1),
        call_entry(kBob, kRef, hx("0x"), 3, 2),
    };
    journal[1].status = false;
    EXPECT_EQ(journal_from_json(journal_to_json(journal)), journal);

    auto j = journal_to_json(journal);
    j[0].erase("nonce");
    EXPECT_THROW(journal_from_json(j), ParseError);
    j = journal_to_json(journal);
    j[1]["from"] = "0x1234";
    EXPECT_THROW(journal_from_json(j), ParseError);
    EXPECT_THROW(journal_from_json(nlohmann::json::object()), ParseError);
}

}  // namespace evmport::reconstruct
