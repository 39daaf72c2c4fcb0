// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <evmport/evm/opcodes.hpp>
#include <evmport/word.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace evmport::codegen {

/// Tiny bytecode assembler for the handwritten templates: sequential
/// emission with two-byte label fixups resolved at build time.
class Assembler {
  public:
    Assembler& op(evm::Opcode opcode) {
        code_.push_back(static_cast<uint8_t>(opcode));
        return *this;
    }

    /// PUSH with the minimal width for `value`.
    Assembler& push(const Word& value);

    /// PUSH with exactly `width` bytes (big-endian, left-padded).
    Assembler& push_exact(size_t width, const Word& value);

    Assembler& push_bytes(ByteView raw);

    Assembler& push_address(const Address& address) { return push_bytes(view(address)); }

    /// PUSH2 placeholder resolved to the label's offset.
    Assembler& push_label(const std::string& name);

    Assembler& label(const std::string& name);

    /// label + JUMPDEST in one step.
    Assembler& jumpdest(const std::string& name) {
        label(name);
        return op(evm::OP_JUMPDEST);
    }

    Assembler& raw(ByteView bytes) {
        code_.append(bytes);
        return *this;
    }

    size_t size() const noexcept { return code_.size(); }

    Bytes build();

  private:
    Bytes code_;
    std::map<std::string, size_t> labels_;
    std::vector<std::pair<size_t, std::string>> fixups_;  // offset of PUSH2 immediate
};

}  // namespace evmport::codegen
