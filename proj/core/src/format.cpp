#include "vspace/format.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <string>

#include "vspace/error.hpp"

namespace vspace {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
  std::string_view text;  // comment stripped
};

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message);
}

// Non-blank lines with comments removed, split on single spaces.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view body = text.substr(start, end - start);
    start = end + 1;
    if (auto hash = body.find('#'); hash != std::string_view::npos) {
      body = body.substr(0, hash);
      while (!body.empty() && body.back() == ' ') body.remove_suffix(1);
    }
    if (body.empty()) continue;
    Line line{number, {}, body};
    std::size_t pos = 0;
    while (true) {
      std::size_t space = body.find(' ', pos);
      std::string_view token = body.substr(pos, space == std::string_view::npos ? body.npos : space - pos);
      if (token.empty()) fail(number, "tokens must be separated by single spaces");
      line.tokens.push_back(token);
      if (space == std::string_view::npos) break;
      pos = space + 1;
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::uint64_t number_token(const Line& line, std::string_view token, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line.number, "bad " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

Point point_token(const Line& line, std::string_view token) {
  const auto value = number_token(line, token, "point");
  if (value >= std::numeric_limits<Point>::max()) fail(line.number, "point out of range");
  return static_cast<Point>(value);
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    fail(line.number, "expected " + std::to_string(n) + " tokens in '" + std::string(line.text) + "'");
  }
}

std::size_t expect_header(const std::vector<Line>& lines, std::string_view kind) {
  if (lines.empty()) throw ParseError("empty file, expected '" + std::string(kind) + " v1'");
  const auto& first = lines.front();
  if (first.tokens.size() != 2 || first.tokens[0] != kind || first.tokens[1] != "v1") {
    fail(first.number, "expected header '" + std::string(kind) + " v1'");
  }
  return 1;
}

void add_label(Labeling& labels, const Line& line, Point p) {
  if (labels.defined(p)) fail(line.number, "duplicate label for point " + std::to_string(p));
  if (!is_valid_label(line.tokens[2])) {
    fail(line.number, "invalid label '" + std::string(line.tokens[2]) + "'");
  }
  labels.set(p, std::string(line.tokens[2]));
}

}  // namespace

SpaceDocument parse_space(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = expect_header(lines, "vspace");
  SpaceDocument doc;
  if (i >= lines.size() || lines[i].tokens[0] != "mode") throw ParseError("missing 'mode' line");
  expect_arity(lines[i], 2);
  if (lines[i].tokens[1] == "strong") {
    doc.space.mode = Mode::strong;
  } else if (lines[i].tokens[1] == "weak") {
    doc.space.mode = Mode::weak;
  } else {
    fail(lines[i].number, "mode must be strong or weak");
  }
  ++i;
  if (i >= lines.size() || lines[i].tokens[0] != "points") throw ParseError("missing 'points' line");
  expect_arity(lines[i], 2);
  const auto n = number_token(lines[i], lines[i].tokens[1], "point count");
  if (n >= std::numeric_limits<Point>::max()) fail(lines[i].number, "point count out of range");
  doc.space.point_count = static_cast<std::size_t>(n);
  ++i;

  std::map<Point, std::vector<Vicinity>> vics;
  for (; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto keyword = line.tokens[0];
    if (keyword == "vic") {
      if (line.tokens.size() < 2 || line.tokens[1].empty() || line.tokens[1].back() != ':') {
        fail(line.number, "expected 'vic P: members...'");
      }
      auto head = line.tokens[1];
      head.remove_suffix(1);
      const Point p = point_token(line, head);
      std::vector<Point> members;
      for (std::size_t k = 2; k < line.tokens.size(); ++k) members.push_back(point_token(line, line.tokens[k]));
      vics[p].emplace_back(std::move(members));
    } else if (keyword == "label") {
      expect_arity(line, 3);
      const Point p = point_token(line, line.tokens[1]);
      if (p >= doc.space.point_count) fail(line.number, "label for point outside the space");
      add_label(doc.labels, line, p);
    } else if (keyword == "a" || keyword == "b") {
      expect_arity(line, 2);
      auto& slot = keyword == "a" ? doc.a : doc.b;
      if (slot) fail(line.number, "duplicate '" + std::string(keyword) + "' line");
      const Point p = point_token(line, line.tokens[1]);
      if (p >= doc.space.point_count) fail(line.number, "endpoint outside the space");
      slot = p;
    } else {
      fail(line.number, "unknown keyword '" + std::string(keyword) + "'");
    }
  }

  std::size_t systems = doc.space.point_count;
  if (!vics.empty()) systems = std::max<std::size_t>(systems, vics.rbegin()->first + std::size_t{1});
  doc.space.systems.resize(systems);
  for (std::size_t p = 0; p < systems; ++p) {
    auto& system = doc.space.systems[p];
    system.owner = static_cast<Point>(p);
    system.mode = doc.space.mode;
    if (auto it = vics.find(static_cast<Point>(p)); it != vics.end()) system.vicinities = std::move(it->second);
  }
  return doc;
}

std::string serialize_space(const SpaceDocument& doc) {
  std::string out = "vspace v1\nmode ";
  out += to_string(doc.space.mode);
  out += "\npoints " + std::to_string(doc.space.point_count) + "\n";
  for (std::size_t p = 0; p < doc.space.systems.size(); ++p) {
    for (const auto& v : doc.space.systems[p].vicinities) {
      out += "vic " + std::to_string(p) + ":";
      for (Point m : v.members()) out += " " + std::to_string(m);
      out += "\n";
    }
  }
  for (const auto& [p, token] : doc.labels.entries()) {
    out += "label " + std::to_string(p) + " " + token + "\n";
  }
  if (doc.a) out += "a " + std::to_string(*doc.a) + "\n";
  if (doc.b) out += "b " + std::to_string(*doc.b) + "\n";
  return out;
}

Cover parse_cover(std::string_view text, std::optional<std::size_t> expected_points) {
  const auto lines = split_lines(text);
  Cover cover;
  for (std::size_t i = expect_header(lines, "cover"); i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "choose") fail(line.number, "expected 'choose P INDEX'");
    expect_arity(line, 3);
    const Point p = point_token(line, line.tokens[1]);
    if (p < cover.choices.size()) fail(line.number, "duplicate or out-of-order point " + std::to_string(p));
    if (p > cover.choices.size()) fail(line.number, "missing point " + std::to_string(cover.choices.size()));
    cover.choices.push_back(static_cast<std::size_t>(number_token(line, line.tokens[2], "index")));
  }
  if (expected_points && cover.choices.size() != *expected_points) {
    throw ParseError("cover has " + std::to_string(cover.choices.size()) + " points, expected " +
                     std::to_string(*expected_points));
  }
  return cover;
}

std::string serialize_cover(const Cover& cover) {
  std::string out = "cover v1\n";
  for (std::size_t p = 0; p < cover.choices.size(); ++p) {
    out += "choose " + std::to_string(p) + " " + std::to_string(cover.choices[p]) + "\n";
  }
  return out;
}

EnumerationOracle parse_oracle(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = expect_header(lines, "oracle");
  if (i >= lines.size() || lines[i].tokens[0] != "stages") throw ParseError("missing 'stages' line");
  expect_arity(lines[i], 2);
  const auto stages = number_token(lines[i], lines[i].tokens[1], "stage bound");
  std::map<std::uint64_t, std::uint64_t> entries;
  for (++i; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "enum") fail(line.number, "expected 'enum X S'");
    expect_arity(line, 3);
    const auto x = number_token(line, line.tokens[1], "number");
    const auto s = number_token(line, line.tokens[2], "stage");
    if (!entries.empty() && x <= entries.rbegin()->first) {
      fail(line.number, "enum lines must have strictly ascending X");
    }
    if (s > stages) fail(line.number, "stage " + std::to_string(s) + " exceeds " + std::to_string(stages));
    entries.emplace(x, s);
  }
  return EnumerationOracle(stages, std::move(entries));
}

std::string serialize_oracle(const EnumerationOracle& oracle) {
  std::string out = "oracle v1\nstages " + std::to_string(oracle.stage_bound()) + "\n";
  for (const auto& [x, s] : oracle.entries()) {
    out += "enum " + std::to_string(x) + " " + std::to_string(s) + "\n";
  }
  return out;
}

Labeling parse_labeling(std::string_view text) {
  const auto lines = split_lines(text);
  Labeling labels;
  for (std::size_t i = expect_header(lines, "labeling"); i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "label") fail(line.number, "expected 'label P TOKEN'");
    expect_arity(line, 3);
    add_label(labels, line, point_token(line, line.tokens[1]));
  }
  return labels;
}

std::string serialize_labeling(const Labeling& labeling) {
  std::string out = "labeling v1\n";
  for (const auto& [p, token] : labeling.entries()) {
    out += "label " + std::to_string(p) + " " + token + "\n";
  }
  return out;
}

std::vector<Program> parse_programs(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<Program> programs;
  for (std::size_t i = expect_header(lines, "programs"); i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() < 2 || line.tokens[0] != "prog" || line.tokens[1].back() != ':') {
      fail(line.number, "expected 'prog I: instructions'");
    }
    auto head = line.tokens[1];
    head.remove_suffix(1);
    if (number_token(line, head, "program index") != programs.size()) {
      fail(line.number, "program indices must be 0, 1, 2, ...");
    }
    const auto body_start = line.text.find(':') + 1;
    try {
      programs.push_back(parse_program(line.text.substr(body_start)));
    } catch (const ParseError& e) {
      fail(line.number, e.what());
    }
  }
  return programs;
}

std::string serialize_programs(const std::vector<Program>& programs) {
  std::string out = "programs v1\n";
  for (std::size_t i = 0; i < programs.size(); ++i) {
    out += "prog " + std::to_string(i) + ":";
    if (!programs[i].empty()) out += " " + format_program(programs[i]);
    out += "\n";
  }
  return out;
}

}  // namespace vspace
