// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/codegen/assembler.hpp>

namespace evmport::codegen {

Assembler& Assembler::push(const Word& value) {
    return push_exact(word_byte_length(value), value);
}

Assembler& Assembler::push_exact(size_t width, const Word& value) {
    if (width < 1 || width > 32)
        throw std::invalid_argument{"push width out of range"};
    if (word_byte_length(value) > width && value != 0)
        throw std::invalid_argument{"push value wider than requested"};
    code_.push_back(static_cast<uint8_t>(evm::OP_PUSH1 + width - 1));
    const Hash32 be = word_to_bytes32(value);
    code_.append(be.data() + 32 - width, width);
    return *this;
}

Assembler& Assembler::push_bytes(ByteView raw) {
    if (raw.empty() || raw.size() > 32)
        throw std::invalid_argument{"push width out of range"};
    code_.push_back(static_cast<uint8_t>(evm::OP_PUSH1 + raw.size() - 1));
    code_.append(raw);
    return *this;
}

Assembler& Assembler::push_label(const std::string& name) {
    code_.push_back(static_cast<uint8_t>(evm::OP_PUSH2));
    fixups_.emplace_back(code_.size(), name);
    code_.push_back(0);
    code_.push_back(0);
    return *this;
}

Assembler& Assembler::label(const std::string& name) {
    if (!labels_.emplace(name, code_.size()).second)
        throw std::invalid_argument{"duplicate label: " + name};
    return *this;
}

Bytes Assembler::build() {
    for (const auto& [offset, name] : fixups_) {
        const auto it = labels_.find(name);
        if (it == labels_.end())
            throw std::invalid_argument{"undefined label: " + name};
        if (it->second > 0xffff)
            throw std::invalid_argument{"label offset exceeds two bytes"};
        code_[offset] = static_cast<uint8_t>(it->second >> 8);
        code_[offset + 1] = static_cast<uint8_t>(it->second & 0xff);
    }
    fixups_.clear();
    return code_;
}

}  // namespace evmport::codegen
