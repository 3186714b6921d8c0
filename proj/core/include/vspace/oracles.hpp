#pragma once

// Bounded, stage-indexed enumerations standing in for the halting set:
// scripted ones, and one derived from running toy register machines.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vspace {

// x first appears at stage entry(x); membership is cumulative from there.
class EnumerationOracle {
 public:
  EnumerationOracle() = default;
  // Throws ValidationError if some stage exceeds stage_bound.
  EnumerationOracle(std::uint64_t stage_bound, std::map<std::uint64_t, std::uint64_t> entries);

  std::uint64_t stage_bound() const { return stage_bound_; }
  const std::map<std::uint64_t, std::uint64_t>& entries() const { return entries_; }
  std::optional<std::uint64_t> stage_of(std::uint64_t x) const;

  // x is enumerated by stage t. Throws ValidationError if t > stage_bound.
  bool member_at(std::uint64_t x, std::uint64_t t) const;
  // x is enumerated exactly at stage s. Throws ValidationError if s > stage_bound.
  bool newly_at(std::uint64_t x, std::uint64_t s) const;

  friend bool operator==(const EnumerationOracle&, const EnumerationOracle&) = default;

 private:
  void require_stage(std::uint64_t t) const;

  std::uint64_t stage_bound_ = 0;
  std::map<std::uint64_t, std::uint64_t> entries_;
};

// Two-register machine: INC r, DECJZ r l (jump to l if r is zero, else
// decrement and fall through), HALT. Running off the end is an implicit
// HALT. Every executed instruction, the final HALT included, is one step.
enum class Opcode { inc, decjz, halt };

struct Instruction {
  Opcode op = Opcode::halt;
  unsigned reg = 0;
  std::size_t target = 0;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

using Program = std::vector<Instruction>;

inline constexpr unsigned kRegisterCount = 2;

// Throws ValidationError for a bad register or a jump past the implicit HALT.
void require_valid_program(const Program& program);

// Steps taken to halt, if that happens within the step budget.
std::optional<std::uint64_t> halting_steps(const Program& program, std::uint64_t budget);

// Program x enters at stage s iff it halts in exactly s steps, s <= stage_bound.
EnumerationOracle machine_enumeration(std::span<const Program> programs, std::uint64_t stage_bound);

// "INC 0; DECJZ 1 3; HALT" form; an empty string is the empty program.
Program parse_program(std::string_view text);
std::string format_program(const Program& program);

}  // namespace vspace
