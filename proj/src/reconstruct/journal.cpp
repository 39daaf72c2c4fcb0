// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/reconstruct/journal.hpp>

#include <fstream>

namespace evmport::reconstruct {

namespace {

Bytes require_hex(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j.at(field).is_string())
        throw ParseError{std::string{"journal: missing or non-string field '"} + field + "'"};
    const auto bytes = from_hex(j.at(field).get<std::string>());
    if (!bytes)
        throw ParseError{std::string{"journal: bad hex in field '"} + field + "'"};
    return *bytes;
}

uint64_t require_uint(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j.at(field).is_number_unsigned())
        throw ParseError{std::string{"journal: missing or non-integer field '"} + field + "'"};
    return j.at(field).get<uint64_t>();
}

}  // namespace

nlohmann::json journal_entry_to_json(const JournalEntry& entry) {
    nlohmann::json j{
        {"from", to_hex(entry.from)},
        {"to", nullptr},
        {"data", to_hex(view(entry.data))},
        {"gas", entry.gas},
        {"nonce", entry.nonce},
        {"block", entry.block},
    };
    if (entry.to)
        j["to"] = to_hex(*entry.to);
    if (entry.status)
        j["status"] = *entry.status;
    return j;
}

JournalEntry journal_entry_from_json(const nlohmann::json& j) {
    JournalEntry entry;
    const Bytes from = require_hex(j, "from");
    if (from.size() != 20)
        throw ParseError{"journal: 'from' is not a 20-byte address"};
    std::copy(from.begin(), from.end(), entry.from.begin());

    if (!j.contains("to"))
        throw ParseError{"journal: missing field 'to'"};
    if (!j.at("to").is_null()) {
        const Bytes to = require_hex(j, "to");
        if (to.size() != 20)
            throw ParseError{"journal: 'to' is not a 20-byte address"};
        Address a;
        std::copy(to.begin(), to.end(), a.begin());
        entry.to = a;
    }

    entry.data = require_hex(j, "data");
    entry.gas = require_uint(j, "gas");
    entry.nonce = require_uint(j, "nonce");
    entry.block = require_uint(j, "block");
    if (j.contains("status")) {
        if (!j.at("status").is_boolean())
            throw ParseError{"journal: 'status' must be a boolean"};
        entry.status = j.at("status").get<bool>();
    }
    return entry;
}

nlohmann::json journal_to_json(const TransactionJournal& journal) {
    nlohmann::json out = nlohmann::json::array();
    for (const JournalEntry& entry : journal)
        out.push_back(journal_entry_to_json(entry));
    return out;
}

TransactionJournal journal_from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw ParseError{"journal: top level must be an array"};
    TransactionJournal journal;
    for (const auto& entry : j)
        journal.push_back(journal_entry_from_json(entry));
    return journal;
}

TransactionJournal load_journal_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError{"journal: cannot open " + path.string()};
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError{"journal: " + path.string() + ": " + e.what()};
    }
    return journal_from_json(j);
}

void save_journal_file(const std::filesystem::path& path, const TransactionJournal& journal) {
    std::ofstream out(path);
    if (!out)
        throw ParseError{"journal: cannot write " + path.string()};
    out << journal_to_json(journal).dump(1) << '\n';
}

}  // namespace evmport::reconstruct
