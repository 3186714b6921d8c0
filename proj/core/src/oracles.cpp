#include "vspace/oracles.hpp"

#include <array>
#include <charconv>
#include <sstream>
#include <utility>

#include "vspace/error.hpp"

namespace vspace {

EnumerationOracle::EnumerationOracle(std::uint64_t stage_bound,
                                     std::map<std::uint64_t, std::uint64_t> entries)
    : stage_bound_(stage_bound), entries_(std::move(entries)) {
  for (const auto& [x, s] : entries_) {
    if (s > stage_bound_) {
      throw ValidationError("entry " + std::to_string(x) + " at stage " + std::to_string(s) +
                            " exceeds stage bound " + std::to_string(stage_bound_));
    }
  }
}

std::optional<std::uint64_t> EnumerationOracle::stage_of(std::uint64_t x) const {
  auto it = entries_.find(x);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void EnumerationOracle::require_stage(std::uint64_t t) const {
  if (t > stage_bound_) {
    throw ValidationError("stage " + std::to_string(t) + " exceeds stage bound " +
                          std::to_string(stage_bound_));
  }
}

bool EnumerationOracle::member_at(std::uint64_t x, std::uint64_t t) const {
  require_stage(t);
  auto s = stage_of(x);
  return s && *s <= t;
}

bool EnumerationOracle::newly_at(std::uint64_t x, std::uint64_t s) const {
  require_stage(s);
  auto entry = stage_of(x);
  return entry && *entry == s;
}

void require_valid_program(const Program& program) {
  for (std::size_t i = 0; i < program.size(); ++i) {
    const auto& ins = program[i];
    if (ins.op == Opcode::halt) continue;
    if (ins.reg >= kRegisterCount) {
      throw ValidationError("instruction " + std::to_string(i) + " uses register " +
                            std::to_string(ins.reg));
    }
    if (ins.op == Opcode::decjz && ins.target > program.size()) {
      throw ValidationError("instruction " + std::to_string(i) + " jumps to " +
                            std::to_string(ins.target));
    }
  }
}

std::optional<std::uint64_t> halting_steps(const Program& program, std::uint64_t budget) {
  require_valid_program(program);
  std::array<std::uint64_t, kRegisterCount> reg{};
  std::size_t pc = 0;
  for (std::uint64_t step = 1; step <= budget; ++step) {
    if (pc >= program.size()) return step;
    const auto& ins = program[pc];
    switch (ins.op) {
      case Opcode::halt:
        return step;
      case Opcode::inc:
        ++reg[ins.reg];
        ++pc;
        break;
      case Opcode::decjz:
        if (reg[ins.reg] == 0) {
          pc = ins.target;
        } else {
          --reg[ins.reg];
          ++pc;
        }
        break;
    }
  }
  return std::nullopt;
}

EnumerationOracle machine_enumeration(std::span<const Program> programs, std::uint64_t stage_bound) {
  std::map<std::uint64_t, std::uint64_t> entries;
  for (std::size_t x = 0; x < programs.size(); ++x) {
    if (auto steps = halting_steps(programs[x], stage_bound)) entries.emplace(x, *steps);
  }
  return EnumerationOracle(stage_bound, std::move(entries));
}

namespace {

std::uint64_t parse_number(std::string_view token, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Program parse_program(std::string_view text) {
  Program program;
  if (text.find_first_not_of(" \t") == std::string_view::npos) return program;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string piece(text.substr(start, end - start));
    std::istringstream words{piece};
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.size() == 1 && tokens[0] == "HALT") {
      program.push_back({Opcode::halt, 0, 0});
    } else if (tokens.size() == 2 && tokens[0] == "INC") {
      program.push_back({Opcode::inc, static_cast<unsigned>(parse_number(tokens[1], "register")), 0});
    } else if (tokens.size() == 3 && tokens[0] == "DECJZ") {
      program.push_back({Opcode::decjz, static_cast<unsigned>(parse_number(tokens[1], "register")),
                         static_cast<std::size_t>(parse_number(tokens[2], "label"))});
    } else {
      throw ParseError("bad instruction '" + piece + "'");
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  try {
    require_valid_program(program);
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  return program;
}

std::string format_program(const Program& program) {
  std::string out;
  for (std::size_t i = 0; i < program.size(); ++i) {
    if (i) out += "; ";
    const auto& ins = program[i];
    switch (ins.op) {
      case Opcode::halt: out += "HALT"; break;
      case Opcode::inc: out += "INC " + std::to_string(ins.reg); break;
      case Opcode::decjz:
        out += "DECJZ " + std::to_string(ins.reg) + " " + std::to_string(ins.target);
        break;
    }
  }
  return out;
}

}  // namespace vspace
