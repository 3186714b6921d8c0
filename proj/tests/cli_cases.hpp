#pragma once

// Exit-code contract cases over the fixture suite. "@" expands to the
// fixture directory and "%" to a scratch directory.

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace vspace::testing {

struct CliCase {
  std::vector<std::string> args;
  int code;
  std::string first_line;  // expected first stdout line; empty means no stdout
};

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

inline std::string expand(const std::string& arg, const std::string& fixtures, const std::string& scratch) {
  std::string out;
  for (char c : arg) {
    if (c == '@') {
      out += fixtures;
    } else if (c == '%') {
      out += scratch;
    } else {
      out += c;
    }
  }
  return out;
}

inline CliResult run_cli(const std::vector<std::string>& args, const std::string& fixtures,
                         const std::string& scratch) {
  std::vector<std::string> expanded;
  for (const auto& a : args) expanded.push_back(expand(a, fixtures, scratch));
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(expanded, out, err);
  return {code, out.str(), err.str()};
}

inline std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

// Cases run in order; later ones read files written by earlier ones.
inline std::vector<CliCase> cli_cases() {
  return {
      {{"validate", "@/s1.vs"}, 0, "valid"},
      {{"validate", "@/weak.vs"}, 0, "valid"},
      {{"validate", "@/owner_missing.vs"}, 1, "invalid"},
      {{"validate", "@/duplicate_strong.vs"}, 1, "invalid"},
      {{"validate", "@/bad_header.vs"}, 2, ""},
      {{"validate", "@/double_space.vs"}, 2, ""},
      {{"validate", "@/no_such_file.vs"}, 2, ""},
      {{"connected", "@/s1.vs", "--a", "0", "--b", "2", "--witness-out", "%/s1_witness.cover"}, 1, "notconnected"},
      {{"connected", "@/s1.vs", "--engine", "pruned"}, 1, "notconnected"},
      {{"connected", "@/s2.vs", "--a", "0", "--b", "2"}, 0, "connected"},
      {{"connected", "@/s2.vs", "--engine", "pruned"}, 0, "connected"},
      {{"connected", "@/annotated.vs"}, 1, "notconnected"},
      {{"connected", "@/weak.vs"}, 1, "notconnected"},
      {{"connected", "@/owner_missing.vs"}, 2, ""},
      {{"connected", "@/s1.vs", "--a", "0", "--b", "7"}, 2, ""},
      {{"connected", "@/s1.vs", "--engine", "greedy"}, 2, ""},
      {{"connected", "@/s2.vs", "--max-covers", "0"}, 2, ""},
      {{"tolerance", "@/s1.vs"}, 0, "tolerant"},
      {{"tolerance", "@/s2.vs"}, 1, "intolerant"},
      {{"tolerant-cover", "@/s1.vs", "--out", "%/s1_tolerant.cover"}, 0, "cover"},
      {{"tolerant-cover", "@/s2.vs", "--out", "%/s2_tolerant.cover"}, 1, "intolerant"},
      {{"induced", "@/s1.vs", "--out", "%/s1_induced.vs"}, 0, "induced"},
      {{"connected", "%/s1_induced.vs"}, 1, "notconnected"},
      {{"verify-nontol", "@/s2.vs"}, 0, "holds"},
      {{"verify-nontol", "@/s1.vs"}, 0, "notapplicable"},
      {{"verify-nontol", "@/equal_labels.vs"}, 0, "notapplicable"},
      {{"verify-nonconn", "@/s1.vs"}, 0, "holds"},
      {{"verify-nonconn", "@/s2.vs", "--a", "1", "--b", "2"}, 0, "holds"},
      {{"verify-nonconn", "@/equal_labels.vs"}, 2, ""},
      {{"code-build", "--oracle", "@/k1.oracle", "--a", "0", "--b", "2", "--points", "20", "--stages", "4",
        "--out-space", "%/k1.vs", "--out-pi", "%/k1.labels"},
       0, "built"},
      {{"tolerant-cover", "%/k1.vs", "--out", "%/k1.cover"}, 0, "cover"},
      {{"code-decode", "--space", "%/k1.vs", "--cover", "%/k1.cover"}, 0, "decoded"},
      {{"code-decode", "--space", "%/k1.vs", "--cover", "%/k1.cover", "--oracle", "@/k1.oracle"}, 0, "agree"},
      {{"code-decode", "--space", "%/k1.vs", "--cover", "%/k1.cover", "--oracle", "@/empty.oracle"}, 1, "disagree"},
      {{"code-decode", "--space", "%/k1.vs", "--cover", "@/s1.cover"}, 2, ""},
      {{"code-decode", "--space", "@/s1.vs", "--cover", "@/missing_point.cover"}, 2, ""},
      {{"code-roundtrip", "--oracle", "@/k1.oracle", "--a", "0", "--b", "2", "--points", "20", "--stages", "4"},
       0, "pass"},
      {{"code-roundtrip", "--oracle", "@/k2.oracle", "--a", "0", "--b", "2", "--points", "60", "--stages", "6"},
       0, "pass"},
      {{"code-roundtrip", "--oracle", "@/empty.oracle", "--a", "0", "--b", "2", "--points", "20", "--stages", "4"},
       0, "pass"},
      {{"code-roundtrip", "--oracle", "@/k1.oracle", "--a", "3", "--b", "4", "--points", "20", "--stages", "4"},
       2, ""},
      {{"code-roundtrip", "--oracle", "@/descending.oracle", "--a", "0", "--b", "2", "--points", "60", "--stages",
        "6"},
       2, ""},
      {{"code-build", "--oracle", "@/late_stage.oracle", "--a", "0", "--b", "2", "--points", "20", "--stages", "3",
        "--out-space", "%/x.vs", "--out-pi", "%/x.labels"},
       2, ""},
      {{"machine-oracle", "--programs", "@/machines.programs", "--stages", "8", "--out", "%/machines.oracle"},
       0, "oracle"},
      {{"code-roundtrip", "--oracle", "%/machines.oracle", "--a", "5", "--b", "6", "--points", "120", "--stages",
        "8"},
       0, "pass"},
      {{"machine-oracle", "--programs", "@/bad.programs", "--stages", "8", "--out", "%/bad.oracle"}, 2, ""},
      {{"frobnicate"}, 2, ""},
      {{}, 2, ""},
  };
}

}  // namespace vspace::testing
