#pragma once

// The coded V-space: from an enumeration oracle, build a strong V-space and
// a 0/1 labeling such that every point is tolerant, the endpoints a and b
// are labeled differently, and any cover witnessing that a and b are not
// connected lets one recover the enumerated set. Everything is truncated to
// points 0..M and stages 0..T.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vspace/connectivity.hpp"
#include "vspace/oracles.hpp"
#include "vspace/space.hpp"

namespace vspace {

// Cantor pairing: <x,s> = (x+s)(x+s+1)/2 + x. Throws ValidationError on
// 64-bit overflow.
std::uint64_t pair(std::uint64_t x, std::uint64_t s);

struct PairCode {
  std::uint64_t x = 0;
  std::uint64_t s = 0;

  friend bool operator==(const PairCode&, const PairCode&) = default;
};

PairCode unpair(std::uint64_t code);

struct CodedSpaceConfig {
  Point a = 0;
  Point b = 0;
  std::uint64_t point_bound = 0;  // M: points are 0..M
  std::uint64_t stage_bound = 0;  // T: stages are 0..T
};

// Everything wrong with (oracle, config); empty means buildable. Only
// entries at stages <= T are visible to the construction.
std::vector<std::string> config_problems(const EnumerationOracle& oracle,
                                         const CodedSpaceConfig& config);

struct CodedSpace {
  FiniteVSpace space;
  Labeling pi;  // tokens "0" and "1"
  CodedSpaceConfig config;
};

// a: {a} u {<x,s> : x enters at s}
// b: {b} u {<x,s+1> : x enters at s}
// x: {x} u {<x,t> : n <= t <= T} for n = 0..T, cut to 0..M, repeats dropped.
CodedSpace build_coded_space(const EnumerationOracle& oracle, const CodedSpaceConfig& config);

Labeling build_pi(const EnumerationOracle& oracle, const CodedSpaceConfig& config);

enum class Membership { out, in };

// Every x in 0..M other than a and b.
using Decoding = std::map<Point, Membership>;

std::vector<Point> members(const Decoding& decoding);

// For each x, t is the least stage with <x,t> in x's chosen vicinity, where
// codes past M count as present (the cut-off tail of the untruncated set).
// x is "in" iff x entered by stage t, read off a's vicinity: some <x,s> with
// s <= t lies in it. Throws ValidationError unless the cover witnesses that
// a and b are not connected.
Decoding decode_from_cover(const FiniteVSpace& space, Point a, Point b, const Cover& cover);
Decoding decode_from_cover(const CodedSpace& coded, const Cover& cover);

struct RoundtripCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RoundtripReport {
  std::vector<RoundtripCheck> checks;
  std::vector<Point> decoded;   // over the compared domain
  std::vector<Point> expected;  // oracle members over the same domain

  bool passed() const;
};

// Build, check labels differ, check tolerance, take the tolerant cover,
// check it is a witness, decode, and compare with the oracle on every x in
// 0..M minus {a,b} that is not enumerated after stage T.
RoundtripReport verify_roundtrip(const EnumerationOracle& oracle, const CodedSpaceConfig& config);

}  // namespace vspace
