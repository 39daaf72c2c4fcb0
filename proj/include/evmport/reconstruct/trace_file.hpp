// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/reconstruct/replay.hpp>

#include <filesystem>

namespace evmport::reconstruct {

/// Trace file format: a JSON array of transactions, each an array of
/// {"key": <0x-hex word>, "value": <0x-hex word>} objects in execution
/// order.
std::vector<TraceDiff> trace_diffs_from_json(const nlohmann::json& j);
nlohmann::json trace_diffs_to_json(const std::vector<TraceDiff>& diffs);

std::vector<TraceDiff> ingest_trace_file(const std::filesystem::path& path);
void save_trace_file(const std::filesystem::path& path, const std::vector<TraceDiff>& diffs);

}  // namespace evmport::reconstruct
