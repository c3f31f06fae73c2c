#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "teachkit/binary_string.hpp"
#include "teachkit/elias.hpp"
#include "teachkit/error.hpp"

namespace teachkit {

// Toy tape machine. One-way infinite tape over {0, 1, blank}; the input sits
// in cells 0..n-1 with the head on cell 0. Instructions are 3-bit opcodes:
//
//   000 MOVR   001 MOVL (no-op at cell 0)   010 WR0   011 WR1
//   100 BR0 <t>   101 BR1 <t>   110 ACCEPT   111 REJECT
//
// Branch targets are Elias gamma codes of (pc + 1), absolute. A branch is
// taken iff the scanned cell holds the tested symbol; blank takes neither.
// Each executed instruction costs one step.
//
// The stream is self-delimiting: it ends at the first ACCEPT/REJECT whose
// pc is >= every branch target read so far. Any bits after that point make
// the program invalid, so no valid program is a proper prefix of another.

enum class Opcode : std::uint8_t { MovR, MovL, Wr0, Wr1, Br0, Br1, Accept, Reject };

inline const char* mnemonic(Opcode op) {
  static constexpr const char* names[] = {"MOVR", "MOVL", "WR0", "WR1", "BR0", "BR1", "ACCEPT", "REJECT"};
  return names[static_cast<int>(op)];
}

struct Instruction {
  Opcode op = Opcode::Accept;
  std::uint32_t target = 0;  ///< branches only

  bool is_branch() const { return op == Opcode::Br0 || op == Opcode::Br1; }
  bool is_halt() const { return op == Opcode::Accept || op == Opcode::Reject; }
  friend bool operator==(const Instruction&, const Instruction&) = default;
};

class TinyProgram {
 public:
  /// Decodes a 0/1 literal; throws InputError unless it is exactly one valid program.
  static TinyProgram decode(std::string_view bits) {
    std::string error;
    auto p = try_decode(bits, &error);
    if (!p) throw InputError("program '" + std::string(bits) + "': " + error);
    return *p;
  }

  static std::optional<TinyProgram> try_decode(std::string_view bits, std::string* error = nullptr) {
    auto fail = [&](const char* msg) -> std::optional<TinyProgram> {
      if (error) *error = msg;
      return std::nullopt;
    };
    TinyProgram p;
    std::size_t pos = 0;
    std::uint32_t max_target = 0;
    while (true) {
      if (pos + 3 > bits.size()) return fail(pos == bits.size() ? "unterminated instruction stream" : "truncated opcode");
      int code = 0;
      for (int i = 0; i < 3; ++i) {
        const char ch = bits[pos + i];
        if (ch != '0' && ch != '1') return fail("non-binary character");
        code = code * 2 + (ch - '0');
      }
      pos += 3;
      Instruction ins{static_cast<Opcode>(code), 0};
      if (ins.is_branch()) {
        EliasDecoded target;
        try {
          target = elias_decode(bits, pos);
        } catch (const InputError&) {
          return fail("malformed branch target");
        }
        if (target.value > bits.size()) return fail("branch target out of range");
        pos += target.consumed;
        ins.target = static_cast<std::uint32_t>(target.value - 1);
        max_target = std::max(max_target, ins.target);
      }
      p.code_.push_back(ins);
      const auto pc = static_cast<std::uint32_t>(p.code_.size() - 1);
      if (ins.is_halt() && pc >= max_target) break;
    }
    if (pos != bits.size()) return fail("trailing bits after the final instruction");
    p.bits_ = std::string(bits);
    return p;
  }

  /// Encodes an instruction list; it must form exactly one valid program.
  static TinyProgram assemble(const std::vector<Instruction>& code) {
    std::string bits;
    for (const auto& ins : code) {
      const int c = static_cast<int>(ins.op);
      for (int i = 2; i >= 0; --i) bits.push_back(((c >> i) & 1) ? '1' : '0');
      if (ins.is_branch()) bits += elias_encode(std::uint64_t{ins.target} + 1);
    }
    return decode(bits);
  }

  const std::string& bits() const { return bits_; }
  std::size_t length() const { return bits_.size(); }
  const std::vector<Instruction>& code() const { return code_; }

  /// One instruction per line: "pc opcode [target]".
  std::string disassemble() const {
    std::ostringstream out;
    for (std::size_t pc = 0; pc < code_.size(); ++pc) {
      out << pc << ' ' << mnemonic(code_[pc].op);
      if (code_[pc].is_branch()) out << ' ' << code_[pc].target;
      out << '\n';
    }
    return out.str();
  }

  friend bool operator==(const TinyProgram& a, const TinyProgram& b) { return a.bits_ == b.bits_; }

 private:
  std::string bits_;
  std::vector<Instruction> code_;
};

enum class Halt { Accept, Reject, Timeout };

inline const char* to_string(Halt h) {
  switch (h) {
    case Halt::Accept: return "ACCEPT";
    case Halt::Reject: return "REJECT";
    case Halt::Timeout: return "TIMEOUT";
  }
  return "?";
}

struct TinyRun {
  Halt halt = Halt::Timeout;
  std::uint64_t steps = 0;
};

/// Executes p on input s for at most step_cap steps. When `trace` is given,
/// one line per executed step is appended: "<step> pc=<pc> head=<h> sym=<0|1|B> <op>".
inline TinyRun run_tiny(const TinyProgram& p, const BinaryString& s, std::uint64_t step_cap,
                        std::string* trace = nullptr) {
  constexpr std::uint8_t blank = 2;
  std::vector<std::uint8_t> tape(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) tape[i] = static_cast<std::uint8_t>(s[i]);
  std::size_t head = 0;
  std::size_t pc = 0;
  const auto& code = p.code();
  TinyRun out;
  auto cell = [&]() -> std::uint8_t { return head < tape.size() ? tape[head] : blank; };
  while (true) {
    if (pc >= code.size()) {
      out.halt = Halt::Reject;
      return out;
    }
    if (out.steps >= step_cap) {
      out.halt = Halt::Timeout;
      return out;
    }
    const auto& ins = code[pc];
    ++out.steps;
    if (trace) {
      const char sym = cell() == blank ? 'B' : static_cast<char>('0' + cell());
      *trace += std::to_string(out.steps) + " pc=" + std::to_string(pc) + " head=" + std::to_string(head) +
                " sym=" + sym + ' ' + mnemonic(ins.op) +
                (ins.is_branch() ? " " + std::to_string(ins.target) : std::string()) + '\n';
    }
    switch (ins.op) {
      case Opcode::MovR: ++head; ++pc; break;
      case Opcode::MovL: if (head > 0) --head; ++pc; break;
      case Opcode::Wr0:
      case Opcode::Wr1:
        if (head >= tape.size()) tape.resize(head + 1, blank);
        tape[head] = ins.op == Opcode::Wr1 ? 1 : 0;
        ++pc;
        break;
      case Opcode::Br0: pc = cell() == 0 ? ins.target : pc + 1; break;
      case Opcode::Br1: pc = cell() == 1 ? ins.target : pc + 1; break;
      case Opcode::Accept: out.halt = Halt::Accept; return out;
      case Opcode::Reject: out.halt = Halt::Reject; return out;
    }
  }
}

/// Every valid program of exactly `length` bits, in lexicographic order.
inline std::vector<TinyProgram> programs_of_length(std::size_t length) {
  std::vector<TinyProgram> out;
  std::string bits;
  // Extends instruction by instruction; a branch target must fit the remaining bits.
  auto rec = [&](auto&& self, std::uint32_t pc, std::uint32_t max_target) -> void {
    const std::size_t left = length - bits.size();
    if (left < 3) return;
    for (int code = 0; code < 8; ++code) {
      const auto op = static_cast<Opcode>(code);
      const std::size_t mark = bits.size();
      for (int i = 2; i >= 0; --i) bits.push_back(((code >> i) & 1) ? '1' : '0');
      if (op == Opcode::Br0 || op == Opcode::Br1) {
        for (std::uint64_t t = 1;; ++t) {
          const auto code_word = elias_encode(t);
          if (bits.size() + code_word.size() > length) break;
          const std::size_t before = bits.size();
          bits += code_word;
          self(self, pc + 1, std::max<std::uint32_t>(max_target, static_cast<std::uint32_t>(t - 1)));
          bits.resize(before);
        }
      } else if (op == Opcode::Accept || op == Opcode::Reject) {
        if (pc >= max_target) {
          if (bits.size() == length) out.push_back(TinyProgram::decode(bits));
        } else {
          self(self, pc + 1, max_target);
        }
      } else {
        self(self, pc + 1, max_target);
      }
      bits.resize(mark);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [](const TinyProgram& a, const TinyProgram& b) { return a.bits() < b.bits(); });
  return out;
}

}  // namespace teachkit
