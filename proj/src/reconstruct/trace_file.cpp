// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/reconstruct/trace_file.hpp>

#include <fstream>

namespace evmport::reconstruct {

namespace {

Word parse_word(const nlohmann::json& j, const char* field, size_t tx, size_t write) {
    const auto where = [&] {
        return "trace: transaction " + std::to_string(tx) + ", write " + std::to_string(write) +
               ", field '" + field + "'";
    };
    if (!j.contains(field) || !j.at(field).is_string())
        throw ParseError{where() + " is missing or not a string"};
    const std::string hex = j.at(field).get<std::string>();
    if (!hex.starts_with("0x"))
        throw ParseError{where() + " lacks the 0x prefix"};
    const auto word = word_from_hex(hex);
    if (!word)
        throw ParseError{where() + " is not a 32-byte hex word: " + hex};
    return *word;
}

}  // namespace

std::vector<TraceDiff> trace_diffs_from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw ParseError{"trace: top level must be an array of transactions"};
    std::vector<TraceDiff> out;
    for (size_t tx = 0; tx < j.size(); ++tx) {
        const auto& writes = j[tx];
        if (!writes.is_array())
            throw ParseError{"trace: transaction " + std::to_string(tx) + " must be an array"};
        TraceDiff diff;
        for (size_t w = 0; w < writes.size(); ++w) {
            diff.writes.push_back({parse_word(writes[w], "key", tx, w),
                                   parse_word(writes[w], "value", tx, w)});
        }
        out.push_back(std::move(diff));
    }
    return out;
}

nlohmann::json trace_diffs_to_json(const std::vector<TraceDiff>& diffs) {
    nlohmann::json out = nlohmann::json::array();
    for (const TraceDiff& diff : diffs) {
        nlohmann::json tx = nlohmann::json::array();
        for (const TraceDiff::Write& write : diff.writes) {
            tx.push_back({{"key", word_to_hex(write.key)}, {"value", word_to_hex(write.value)}});
        }
        out.push_back(std::move(tx));
    }
    return out;
}

std::vector<TraceDiff> ingest_trace_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError{"trace: cannot open " + path.string()};
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError{"trace: " + path.string() + ": " + e.what()};
    }
    return trace_diffs_from_json(j);
}

void save_trace_file(const std::filesystem::path& path, const std::vector<TraceDiff>& diffs) {
    std::ofstream out(path);
    if (!out)
        throw ParseError{"trace: cannot write " + path.string()};
    out << trace_diffs_to_json(diffs).dump(1) << '\n';
}

}  // namespace evmport::reconstruct
