#pragma once

// Line-oriented text formats. Lines are LF-terminated, '#' starts a comment
// running to end of line, and tokens are separated by single spaces.
// Serializers emit the canonical form: ascending points, sorted members,
// no comments. Parsers throw ParseError with a line number.
//
//   vspace v1            cover v1          oracle v1
//   mode strong|weak     choose 0 INDEX    stages T
//   points N             choose 1 INDEX    enum X S     (ascending X)
//   vic P: m1 m2 ...     ...
//   label P TOKEN
//   a P
//   b P
//
//   labeling v1          programs v1
//   label P TOKEN        prog 0: INC 0; DECJZ 0 3; HALT

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vspace/connectivity.hpp"
#include "vspace/oracles.hpp"
#include "vspace/space.hpp"

namespace vspace {

struct SpaceDocument {
  FiniteVSpace space;
  Labeling labels;
  std::optional<Point> a;
  std::optional<Point> b;
};

SpaceDocument parse_space(std::string_view text);
std::string serialize_space(const SpaceDocument& doc);

// With expected_points, a short cover is a parse error too.
Cover parse_cover(std::string_view text, std::optional<std::size_t> expected_points = std::nullopt);
std::string serialize_cover(const Cover& cover);

EnumerationOracle parse_oracle(std::string_view text);
std::string serialize_oracle(const EnumerationOracle& oracle);

Labeling parse_labeling(std::string_view text);
std::string serialize_labeling(const Labeling& labeling);

std::vector<Program> parse_programs(std::string_view text);
std::string serialize_programs(const std::vector<Program>& programs);

}  // namespace vspace
