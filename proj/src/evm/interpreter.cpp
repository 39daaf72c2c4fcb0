// evmport: EVM smart contract portability toolkit
// Copyright 2026 The evmport Authors.
// SPDX-License-Identifier: Apache-2.0

#include <evmport/evm/interpreter.hpp>

#include <evmport/create_address.hpp>
#include <evmport/encoding/keccak.hpp>

#include <cassert>
#include <limits>
#include <stdexcept>

namespace evmport::evm {

namespace {

constexpr size_t kStackLimit = 1024;
constexpr int kMaxCallDepth = 1024;
// Hard memory ceiling; stands in for quadratic expansion gas, which this
// gas model leaves out.
constexpr size_t kMemoryLimit = size_t{1} << 26;

struct PendingDestroy {
    Address victim;
    Address beneficiary;
};

struct TxContext {
    WorldState world;
    const GasSchedule& schedule;
    std::vector<TraceEvent> trace;
    std::vector<PendingDestroy> destroys;
    int depth = 0;
};

struct Frame {
    ByteView code;
    ByteView calldata;
    Address address;  // storage and identity context
    Address caller;
    Word call_value;
};

struct FrameResult {
    VmStatus status = VmStatus::Success;
    Bytes output;
    int64_t gas_left = 0;
    uint8_t invalid_opcode = 0;
};

std::optional<size_t> to_size(const Word& w, size_t limit) {
    if (w > Word{static_cast<uint64_t>(limit)})
        return std::nullopt;
    return static_cast<size_t>(static_cast<uint64_t>(w));
}

uint64_t copy_word_gas(const GasSchedule& schedule, size_t size) {
    return schedule.codecopy_word * ((size + 31) / 32);
}

FrameResult run_frame(TxContext& ctx, const Frame& frame, int64_t gas);

/// Shared body of CALL and DELEGATECALL.
struct SubCall {
    Word gas;
    Address to;
    Word value;
    size_t in_offset = 0;
    size_t in_size = 0;
    size_t out_offset = 0;
    size_t out_size = 0;
};

class Machine {
  public:
    Machine(TxContext& ctx, const Frame& frame, int64_t gas)
        : ctx_(ctx), frame_(frame), gas_left_(gas), jumpdests_(jumpdest_map(frame.code)) {}

    FrameResult run();

  private:
    TxContext& ctx_;
    const Frame& frame_;
    int64_t gas_left_;
    std::vector<bool> jumpdests_;
    std::vector<Word> stack_;
    std::vector<uint8_t> memory_;
    Bytes return_data_;
    size_t pc_ = 0;

    // Exceptional halts consume all remaining gas; REVERT keeps it.
    FrameResult exceptional(VmStatus status, uint8_t opcode = 0) {
        return FrameResult{status, {}, 0, opcode};
    }
    FrameResult halt(VmStatus status, Bytes output = {}) {
        return FrameResult{status, std::move(output), gas_left_, 0};
    }

    bool charge(uint64_t cost) {
        gas_left_ -= static_cast<int64_t>(cost);
        return gas_left_ >= 0;
    }

    bool ensure_memory(size_t end) {
        if (end > kMemoryLimit)
            return false;
        if (end > memory_.size())
            memory_.resize(end, 0);
        return true;
    }

    Word pop() {
        Word w = stack_.back();
        stack_.pop_back();
        return w;
    }

    AccountState& self_account() { return ctx_.world.get_or_create(frame_.address); }
};

FrameResult Machine::run() {
    if (frame_.code.empty())
        return halt(VmStatus::Success);
    const GasSchedule& schedule = ctx_.schedule;

    while (pc_ < frame_.code.size()) {
        const uint8_t op = frame_.code[pc_];
        const size_t instruction_pc = pc_;
        pc_ += 1 + immediate_size(op);

        // Stack preconditions.
        static constexpr int kNoCheck = -1;
        int pops = kNoCheck;
        switch (op) {
            case OP_STOP: case OP_CALLER: case OP_CALLVALUE: case OP_CALLDATASIZE:
            case OP_CODESIZE: case OP_RETURNDATASIZE: case OP_PC: case OP_JUMPDEST:
                pops = 0;
                break;
            case OP_ISZERO: case OP_NOT: case OP_CALLDATALOAD: case OP_EXTCODESIZE:
            case OP_POP: case OP_MLOAD: case OP_SLOAD: case OP_JUMP: case OP_SELFDESTRUCT:
                pops = 1;
                break;
            case OP_ADD: case OP_MUL: case OP_SUB: case OP_DIV: case OP_LT: case OP_GT:
            case OP_EQ: case OP_AND: case OP_OR: case OP_BYTE: case OP_SHL: case OP_SHR:
            case OP_SHA3: case OP_MSTORE: case OP_SSTORE: case OP_JUMPI: case OP_RETURN:
            case OP_REVERT:
                pops = 2;
                break;
            case OP_CALLDATACOPY: case OP_CODECOPY: case OP_RETURNDATACOPY:
                pops = 3;
                break;
            case OP_EXTCODECOPY:
                pops = 4;
                break;
            case OP_DELEGATECALL:
                pops = 6;
                break;
            case OP_CALL:
                pops = 7;
                break;
            default:
                if (is_push(op))
                    pops = 0;
                else if (op >= OP_DUP1 && op <= OP_DUP16)
                    pops = op - OP_DUP1 + 1;
                else if (op >= OP_SWAP1 && op <= OP_SWAP16)
                    pops = op - OP_SWAP1 + 2;
                else
                    return exceptional(VmStatus::InvalidOpcode, op);
        }
        if (pops > 0 && stack_.size() < static_cast<size_t>(pops))
            return exceptional(VmStatus::StackUnderflow);

        // Terminal instructions are free; everything else costs at least
        // the flat per-op gas.
        switch (op) {
            case OP_STOP: case OP_RETURN: case OP_REVERT:
                break;
            case OP_SSTORE:
                break;  // charged below, once the slot transition is known
            case OP_CALL: case OP_DELEGATECALL:
                if (!charge(schedule.call_base))
                    return exceptional(VmStatus::OutOfGas);
                break;
            default:
                if (!charge(schedule.base_op))
                    return exceptional(VmStatus::OutOfGas);
                break;
        }

        switch (op) {
            case OP_STOP:
                return halt(VmStatus::Success);

            case OP_ADD: {
                const Word a = pop(), b = pop();
                stack_.push_back(a + b);
                break;
            }
            case OP_MUL: {
                const Word a = pop(), b = pop();
                stack_.push_back(a * b);
                break;
            }
            case OP_SUB: {
                const Word a = pop(), b = pop();
                stack_.push_back(a - b);
                break;
            }
            case OP_DIV: {
                const Word a = pop(), b = pop();
                stack_.push_back(b == 0 ? Word{0} : Word{a / b});
                break;
            }
            case OP_LT: {
                const Word a = pop(), b = pop();
                stack_.push_back(Word{a < b ? 1 : 0});
                break;
            }
            case OP_GT: {
                const Word a = pop(), b = pop();
                stack_.push_back(Word{a > b ? 1 : 0});
                break;
            }
            case OP_EQ: {
                const Word a = pop(), b = pop();
                stack_.push_back(Word{a == b ? 1 : 0});
                break;
            }
            case OP_ISZERO:
                stack_.back() = stack_.back() == 0 ? 1 : 0;
                break;
            case OP_AND: {
                const Word a = pop(), b = pop();
                stack_.push_back(a & b);
                break;
            }
            case OP_OR: {
                const Word a = pop(), b = pop();
                stack_.push_back(a | b);
                break;
            }
            case OP_NOT:
                stack_.back() = ~stack_.back();
                break;
            case OP_BYTE: {
                const Word i = pop(), x = pop();
                if (i >= 32) {
                    stack_.push_back(0);
                } else {
                    const auto bytes = word_to_bytes32(x);
                    stack_.push_back(bytes[static_cast<size_t>(static_cast<uint64_t>(i))]);
                }
                break;
            }
            case OP_SHL: {
                const Word shift = pop(), value = pop();
                stack_.push_back(shift >= 256 ? Word{0}
                                              : Word{value << static_cast<unsigned>(shift)});
                break;
            }
            case OP_SHR: {
                const Word shift = pop(), value = pop();
                stack_.push_back(shift >= 256 ? Word{0}
                                              : Word{value >> static_cast<unsigned>(shift)});
                break;
            }

            case OP_SHA3: {
                const Word woff = pop(), wsize = pop();
                const auto size = to_size(wsize, kMemoryLimit);
                if (!size)
                    return exceptional(VmStatus::OutOfGas);
                Bytes input;
                if (*size > 0) {
                    const auto off = to_size(woff, kMemoryLimit);
                    if (!off || !ensure_memory(*off + *size))
                        return exceptional(VmStatus::OutOfGas);
                    input.assign(memory_.data() + *off, *size);
                }
                const Hash32 digest = keccak256(input);
                stack_.push_back(word_from_bytes32(digest));
                break;
            }

            case OP_CALLER:
                stack_.push_back(word_from_address(frame_.caller));
                break;
            case OP_CALLVALUE:
                stack_.push_back(frame_.call_value);
                break;

            case OP_CALLDATALOAD: {
                const Word woff = pop();
                Hash32 buf{};
                const auto off = to_size(woff, std::numeric_limits<uint32_t>::max());
                if (off) {
                    for (size_t i = 0; i < 32 && *off + i < frame_.calldata.size(); ++i)
                        buf[i] = frame_.calldata[*off + i];
                }
                stack_.push_back(word_from_bytes32(buf));
                break;
            }
            case OP_CALLDATASIZE:
                stack_.push_back(static_cast<uint64_t>(frame_.calldata.size()));
                break;
            case OP_CODESIZE:
                stack_.push_back(static_cast<uint64_t>(frame_.code.size()));
                break;
            case OP_RETURNDATASIZE:
                stack_.push_back(static_cast<uint64_t>(return_data_.size()));
                break;

            case OP_CALLDATACOPY:
            case OP_CODECOPY:
            case OP_RETURNDATACOPY: {
                const Word wdest = pop(), wsrc = pop(), wsize = pop();
                const ByteView src = op == OP_CALLDATACOPY ? frame_.calldata
                                   : op == OP_CODECOPY     ? frame_.code
                                                           : view(return_data_);
                const auto size = to_size(wsize, kMemoryLimit);
                if (!size)
                    return exceptional(VmStatus::OutOfGas);
                if (*size == 0) {
                    if (op == OP_RETURNDATACOPY && wsrc > return_data_.size())
                        return exceptional(VmStatus::ReturnDataOutOfBounds);
                    break;
                }
                if (!charge(copy_word_gas(ctx_.schedule, *size)))
                    return exceptional(VmStatus::OutOfGas);
                const auto dest = to_size(wdest, kMemoryLimit);
                if (!dest || !ensure_memory(*dest + *size))
                    return exceptional(VmStatus::OutOfGas);
                const auto srcoff = to_size(wsrc, std::numeric_limits<uint32_t>::max());
                if (op == OP_RETURNDATACOPY) {
                    if (!srcoff || *srcoff + *size > return_data_.size())
                        return exceptional(VmStatus::ReturnDataOutOfBounds);
                }
                for (size_t i = 0; i < *size; ++i) {
                    const size_t s = srcoff ? *srcoff + i : src.size();
                    memory_[*dest + i] = s < src.size() ? src[s] : 0;
                }
                break;
            }

            case OP_EXTCODESIZE: {
                const Address address = word_to_address(pop());
                stack_.push_back(static_cast<uint64_t>(ctx_.world.code_at(address).size()));
                break;
            }
            case OP_EXTCODECOPY: {
                const Address address = word_to_address(pop());
                const Word wdest = pop(), wsrc = pop(), wsize = pop();
                const Bytes code = ctx_.world.code_at(address);
                const auto size = to_size(wsize, kMemoryLimit);
                if (!size)
                    return exceptional(VmStatus::OutOfGas);
                if (*size == 0)
                    break;
                if (!charge(copy_word_gas(ctx_.schedule, *size)))
                    return exceptional(VmStatus::OutOfGas);
                const auto dest = to_size(wdest, kMemoryLimit);
                if (!dest || !ensure_memory(*dest + *size))
                    return exceptional(VmStatus::OutOfGas);
                const auto srcoff = to_size(wsrc, std::numeric_limits<uint32_t>::max());
                for (size_t i = 0; i < *size; ++i) {
                    const size_t s = srcoff ? *srcoff + i : code.size();
                    memory_[*dest + i] = s < code.size() ? code[s] : 0;
                }
                break;
            }

            case OP_POP:
                stack_.pop_back();
                break;

            case OP_MLOAD: {
                const auto off = to_size(pop(), kMemoryLimit);
                if (!off || !ensure_memory(*off + 32))
                    return exceptional(VmStatus::OutOfGas);
                Hash32 buf;
                std::copy_n(memory_.data() + *off, 32, buf.begin());
                stack_.push_back(word_from_bytes32(buf));
                break;
            }
            case OP_MSTORE: {
                const Word woff = pop(), value = pop();
                const auto off = to_size(woff, kMemoryLimit);
                if (!off || !ensure_memory(*off + 32))
                    return exceptional(VmStatus::OutOfGas);
                const Hash32 buf = word_to_bytes32(value);
                std::copy(buf.begin(), buf.end(), memory_.begin() + static_cast<ptrdiff_t>(*off));
                break;
            }

            case OP_SLOAD: {
                const Word key = pop();
                const AccountState* account = ctx_.world.find(frame_.address);
                Word value = 0;
                if (account) {
                    const auto it = account->storage.find(key);
                    if (it != account->storage.end())
                        value = it->second;
                }
                stack_.push_back(value);
                break;
            }
            case OP_SSTORE: {
                const Word key = pop(), value = pop();
                AccountState& account = self_account();
                const bool creates_slot =
                    value != 0 && account.storage.find(key) == account.storage.end();
                if (!charge(creates_slot ? schedule.sstore_set : schedule.sstore_reset))
                    return exceptional(VmStatus::OutOfGas);
                snapshot_assign(account.storage, key, value);
                ctx_.trace.push_back(StorageWrite{frame_.address, key, value});
                break;
            }

            case OP_JUMP:
            case OP_JUMPI: {
                const Word wdest = pop();
                bool taken = true;
                if (op == OP_JUMPI)
                    taken = pop() != 0;
                if (!taken)
                    break;
                const auto dest = to_size(wdest, frame_.code.size());
                if (!dest || *dest >= frame_.code.size() || !jumpdests_[*dest])
                    return exceptional(VmStatus::BadJumpDestination);
                pc_ = *dest;
                break;
            }
            case OP_PC:
                stack_.push_back(static_cast<uint64_t>(instruction_pc));
                break;
            case OP_JUMPDEST:
                break;

            case OP_RETURN:
            case OP_REVERT: {
                const Word woff = pop(), wsize = pop();
                const auto size = to_size(wsize, kMemoryLimit);
                if (!size)
                    return exceptional(VmStatus::OutOfGas);
                Bytes output;
                if (*size > 0) {
                    const auto off = to_size(woff, kMemoryLimit);
                    if (!off || !ensure_memory(*off + *size))
                        return exceptional(VmStatus::OutOfGas);
                    output.assign(memory_.data() + *off, *size);
                }
                return halt(op == OP_RETURN ? VmStatus::Success : VmStatus::Revert,
                            std::move(output));
            }

            case OP_CALL:
            case OP_DELEGATECALL: {
                SubCall call;
                call.gas = pop();
                call.to = word_to_address(pop());
                if (op == OP_CALL)
                    call.value = pop();
                const Word winoff = pop(), winsize = pop(), woutoff = pop(), woutsize = pop();
                const auto in_size = to_size(winsize, kMemoryLimit);
                const auto out_size = to_size(woutsize, kMemoryLimit);
                if (!in_size || !out_size)
                    return exceptional(VmStatus::OutOfGas);
                call.in_size = *in_size;
                call.out_size = *out_size;
                if (call.in_size > 0) {
                    const auto off = to_size(winoff, kMemoryLimit);
                    if (!off || !ensure_memory(*off + call.in_size))
                        return exceptional(VmStatus::OutOfGas);
                    call.in_offset = *off;
                }
                if (call.out_size > 0) {
                    const auto off = to_size(woutoff, kMemoryLimit);
                    if (!off || !ensure_memory(*off + call.out_size))
                        return exceptional(VmStatus::OutOfGas);
                    call.out_offset = *off;
                }

                if (ctx_.depth + 1 > kMaxCallDepth) {
                    return_data_.clear();
                    stack_.push_back(0);
                    break;
                }

                // Forward the requested gas, capped by what remains.
                int64_t forwarded = gas_left_;
                if (call.gas < Word{static_cast<uint64_t>(forwarded)})
                    forwarded = static_cast<int64_t>(static_cast<uint64_t>(call.gas));

                if (op == OP_CALL && call.value != 0 &&
                    self_account().balance < call.value) {
                    return_data_.clear();
                    stack_.push_back(0);
                    break;
                }

                const Bytes input(memory_.data() + call.in_offset, call.in_size);
                const Bytes callee_code = ctx_.world.code_at(call.to);

                // Roll back world, trace and queued destructions if the
                // sub-frame fails.
                WorldState saved = ctx_.world;
                const size_t trace_mark = ctx_.trace.size();
                const size_t destroy_mark = ctx_.destroys.size();

                Frame sub_frame{view(callee_code), view(input), frame_.address, frame_.caller,
                                frame_.call_value};
                if (op == OP_CALL) {
                    sub_frame.address = call.to;
                    sub_frame.caller = frame_.address;
                    sub_frame.call_value = call.value;
                    if (call.value != 0) {
                        self_account().balance -= call.value;
                        ctx_.world.get_or_create(call.to).balance += call.value;
                    }
                    ctx_.trace.push_back(
                        CallEvent{CallKind::Message, frame_.address, call.to});
                } else {
                    ctx_.trace.push_back(
                        CallEvent{CallKind::Delegate, frame_.address, call.to});
                }

                ++ctx_.depth;
                const FrameResult sub = run_frame(ctx_, sub_frame, forwarded);
                --ctx_.depth;

                gas_left_ -= forwarded - sub.gas_left;
                return_data_ = sub.output;
                if (sub.status == VmStatus::Success) {
                    stack_.push_back(1);
                } else {
                    ctx_.world = std::move(saved);
                    ctx_.trace.resize(trace_mark);
                    ctx_.destroys.resize(destroy_mark);
                    stack_.push_back(0);
                }
                const size_t copy_len = std::min(call.out_size, return_data_.size());
                if (copy_len > 0)
                    std::copy_n(return_data_.data(), copy_len,
                                memory_.begin() + static_cast<ptrdiff_t>(call.out_offset));
                break;
            }

            case OP_SELFDESTRUCT: {
                const Address beneficiary = word_to_address(pop());
                ctx_.destroys.push_back(PendingDestroy{frame_.address, beneficiary});
                ctx_.trace.push_back(DestroyEvent{frame_.address});
                return halt(VmStatus::Success);
            }

            default: {
                if (is_push(op)) {
                    const size_t n = immediate_size(op);
                    Hash32 buf{};
                    // Truncated immediates read as zero-padded.
                    for (size_t i = 0; i < n; ++i) {
                        const size_t at = instruction_pc + 1 + i;
                        buf[32 - n + i] = at < frame_.code.size() ? frame_.code[at] : 0;
                    }
                    if (stack_.size() >= kStackLimit)
                        return exceptional(VmStatus::StackOverflow);
                    stack_.push_back(word_from_bytes32(buf));
                    break;
                }
                if (op >= OP_DUP1 && op <= OP_DUP16) {
                    if (stack_.size() >= kStackLimit)
                        return exceptional(VmStatus::StackOverflow);
                    stack_.push_back(stack_[stack_.size() - 1 - (op - OP_DUP1)]);
                    break;
                }
                // SWAP1..SWAP16; anything else was rejected above.
                std::swap(stack_[stack_.size() - 1], stack_[stack_.size() - 2 - (op - OP_SWAP1)]);
                break;
            }
        }

        if (stack_.size() > kStackLimit)
            return exceptional(VmStatus::StackOverflow);
    }

    // Running off the end of the code is an implicit STOP.
    return halt(VmStatus::Success);
}

FrameResult run_frame(TxContext& ctx, const Frame& frame, int64_t gas) {
    Machine machine(ctx, frame, gas);
    return machine.run();
}

void apply_destructions(TxContext& ctx) {
    for (const PendingDestroy& d : ctx.destroys) {
        const auto it = ctx.world.accounts.find(d.victim);
        if (it == ctx.world.accounts.end())
            continue;
        const Word balance = it->second.balance;
        ctx.world.accounts.erase(it);
        if (d.beneficiary != d.victim)
            ctx.world.get_or_create(d.beneficiary).balance += balance;
        ctx.world.destroyed.insert(d.victim);
    }
}

}  // namespace

const char* to_string(VmStatus status) noexcept {
    switch (status) {
        case VmStatus::Success: return "success";
        case VmStatus::Revert: return "revert";
        case VmStatus::OutOfGas: return "out of gas";
        case VmStatus::StackUnderflow: return "stack underflow";
        case VmStatus::StackOverflow: return "stack overflow";
        case VmStatus::InvalidOpcode: return "invalid opcode";
        case VmStatus::BadJumpDestination: return "bad jump destination";
        case VmStatus::ReturnDataOutOfBounds: return "return data out of bounds";
        case VmStatus::CallDepthExceeded: return "call depth exceeded";
        case VmStatus::CreateCollision: return "create collision";
    }
    return "unknown";
}

std::vector<bool> jumpdest_map(ByteView code) {
    std::vector<bool> map(code.size(), false);
    for (size_t i = 0; i < code.size(); ++i) {
        const uint8_t op = code[i];
        if (op == OP_JUMPDEST)
            map[i] = true;
        else if (is_push(op))
            i += immediate_size(op);
    }
    return map;
}

const std::set<uint8_t>& supported_opcodes() {
    static const std::set<uint8_t> ops = [] {
        std::set<uint8_t> s{
            OP_STOP,         OP_ADD,          OP_MUL,           OP_SUB,
            OP_DIV,          OP_LT,           OP_GT,            OP_EQ,
            OP_ISZERO,       OP_AND,          OP_OR,            OP_NOT,
            OP_BYTE,         OP_SHL,          OP_SHR,           OP_SHA3,
            OP_CALLER,       OP_CALLVALUE,    OP_CALLDATALOAD,  OP_CALLDATASIZE,
            OP_CALLDATACOPY, OP_CODESIZE,     OP_CODECOPY,      OP_EXTCODESIZE,
            OP_EXTCODECOPY,  OP_RETURNDATASIZE, OP_RETURNDATACOPY, OP_POP,
            OP_MLOAD,        OP_MSTORE,       OP_SLOAD,         OP_SSTORE,
            OP_JUMP,         OP_JUMPI,        OP_PC,            OP_JUMPDEST,
            OP_CALL,         OP_RETURN,       OP_DELEGATECALL,  OP_REVERT,
            OP_SELFDESTRUCT,
        };
        for (int op = OP_PUSH1; op <= OP_PUSH32; ++op)
            s.insert(static_cast<uint8_t>(op));
        for (int op = OP_DUP1; op <= OP_DUP16; ++op)
            s.insert(static_cast<uint8_t>(op));
        for (int op = OP_SWAP1; op <= OP_SWAP16; ++op)
            s.insert(static_cast<uint8_t>(op));
        return s;
    }();
    return ops;
}

MessageResult execute_message(const WorldState& world, const Address& from, const Address& to,
                              ByteView calldata, uint64_t gas, const GasSchedule& schedule) {
    MessageResult out;
    out.world = world;

    TxContext ctx{world, schedule, {}, {}, 0};
    ctx.trace.push_back(CallEvent{CallKind::Message, from, to});

    const Bytes code = ctx.world.code_at(to);
    const Frame frame{view(code), calldata, to, from, 0};
    const FrameResult res = run_frame(ctx, frame, static_cast<int64_t>(gas));

    out.status = res.status;
    out.return_data = res.output;
    out.gas_used = gas - static_cast<uint64_t>(res.gas_left);
    out.invalid_opcode = res.invalid_opcode;
    if (res.status == VmStatus::Success) {
        apply_destructions(ctx);
        out.world = std::move(ctx.world);
        out.trace.events = std::move(ctx.trace);
    }
    return out;
}

DeployResult execute_deploy(const WorldState& world, const Address& from, ByteView deploy_code,
                            uint64_t gas, const GasSchedule& schedule) {
    if (gas > schedule.block_gas_limit)
        throw std::invalid_argument{"execute_deploy: gas exceeds the block gas limit"};

    DeployResult out;
    out.world = world;

    TxContext ctx{world, schedule, {}, {}, 0};
    const uint64_t nonce = ctx.world.get_or_create(from).nonce;
    const Address created = create_address(from, nonce);
    out.created = created;

    if (!ctx.world.code_at(created).empty()) {
        out.status = VmStatus::CreateCollision;
        return out;
    }

    ctx.world.get_or_create(from).nonce = nonce + 1;
    ctx.world.get_or_create(created);
    ctx.trace.push_back(CallEvent{CallKind::Create, from, created});
    ctx.trace.push_back(CreateEvent{created});

    const Frame frame{deploy_code, {}, created, from, 0};
    FrameResult res = run_frame(ctx, frame, static_cast<int64_t>(gas));

    if (res.status == VmStatus::Success) {
        const uint64_t deposit =
            schedule.code_deposit_per_byte * static_cast<uint64_t>(res.output.size());
        res.gas_left -= static_cast<int64_t>(deposit);
        if (res.gas_left < 0) {
            res.status = VmStatus::OutOfGas;
            res.gas_left = 0;
        }
    }

    out.gas_used = gas - static_cast<uint64_t>(res.gas_left);
    out.status = res.status;
    if (res.status == VmStatus::Success) {
        ctx.world.get_or_create(created).code = res.output;
        out.runtime_code = std::move(res.output);
        apply_destructions(ctx);
        out.world = std::move(ctx.world);
        out.trace.events = std::move(ctx.trace);
    }
    return out;
}

}  // namespace evmport::evm
