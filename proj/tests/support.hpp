#pragma once

// Shared fixtures, random generators, and reference implementations used as
// independent oracles by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vspace/coding.hpp"
#include "vspace/connectivity.hpp"
#include "vspace/space.hpp"

namespace vspace::testing {

inline FiniteVSpace make_space(Mode mode, const std::vector<std::vector<Vicinity>>& systems) {
  FiniteVSpace space{mode, systems.size(), {}};
  for (std::size_t p = 0; p < systems.size(); ++p) {
    space.systems.push_back({static_cast<Point>(p), mode, systems[p]});
  }
  return space;
}

// points {0,1,2}; 0:[{0,1}], 1:[{1},{1,2}], 2:[{2}]
inline FiniteVSpace s1() {
  return make_space(Mode::strong, {{{0, 1}}, {{1}, {1, 2}}, {{2}}});
}

// s1 with point 1's system replaced by [{0,1,2}]
inline FiniteVSpace s2() {
  return make_space(Mode::strong, {{{0, 1}}, {{0, 1, 2}}, {{2}}});
}

// {0->A, 1->A, 2->B}
inline Labeling aab() { return Labeling({"A", "A", "B"}); }

// Naive check, independent of the library: does the cover (raw indices,
// weak padding applied) admit a chain from a to b? Pairwise intersection
// tested member by member, then depth-first search.
inline bool reference_chain(const FiniteVSpace& space, const std::vector<std::size_t>& cover, Point a,
                            Point b) {
  const std::size_t n = space.point_count;
  auto chosen = [&](std::size_t x) -> const std::vector<Point>& {
    const auto& sys = space.systems[x];
    const std::size_t i = cover[x] < sys.vicinities.size() ? cover[x] : 0;
    return sys.vicinities[i].members();
  };
  auto meet = [&](std::size_t x, std::size_t y) {
    for (Point u : chosen(x)) {
      for (Point v : chosen(y)) {
        if (u == v) return true;
      }
    }
    return false;
  };
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    if (u == b) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v] && v != u && meet(u, v)) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return false;
}

// All raw covers in lexicographic order (point 0 most significant); returns
// the first witness, or nothing when a and b are connected.
inline std::optional<Cover> reference_witness(const FiniteVSpace& space, Point a, Point b) {
  const std::size_t n = space.point_count;
  std::vector<std::size_t> cover(n, 0);
  while (true) {
    if (!reference_chain(space, cover, a, b)) return Cover{cover};
    std::size_t p = n;
    while (true) {
      if (p == 0) return std::nullopt;
      --p;
      if (++cover[p] < space.systems[p].vicinities.size()) break;
      cover[p] = 0;
    }
  }
}

// Calls f(cover) for every raw cover.
template <typename F>
void for_each_cover(const FiniteVSpace& space, F&& f) {
  const std::size_t n = space.point_count;
  std::vector<std::size_t> cover(n, 0);
  while (true) {
    f(Cover{cover});
    std::size_t p = n;
    while (true) {
      if (p == 0) return;
      --p;
      if (++cover[p] < space.systems[p].vicinities.size()) break;
      cover[p] = 0;
    }
  }
}

// Random valid space: up to max_points points, 1..max_vicinities vicinities
// per point, each a random subset containing its owner. Strong spaces get
// pairwise distinct vicinities; weak spaces may repeat one.
inline FiniteVSpace random_space(std::mt19937_64& rng, std::size_t max_points, std::size_t max_vicinities,
                                 std::optional<Mode> mode = std::nullopt) {
  std::uniform_int_distribution<std::size_t> points(1, max_points);
  std::uniform_int_distribution<std::size_t> count(1, max_vicinities);
  const std::size_t n = points(rng);
  const Mode m = mode ? *mode : (rng() % 2 ? Mode::weak : Mode::strong);
  FiniteVSpace space{m, n, {}};
  for (std::size_t x = 0; x < n; ++x) {
    VicinitySystem system{static_cast<Point>(x), m, {}};
    const std::size_t k = count(rng);
    std::size_t attempts = 0;
    while (system.vicinities.size() < k && attempts++ < 64) {
      std::vector<Point> members{static_cast<Point>(x)};
      for (std::size_t y = 0; y < n; ++y) {
        if (y != x && rng() % 3 == 0) members.push_back(static_cast<Point>(y));
      }
      Vicinity v(members);
      if (m == Mode::weak && !system.vicinities.empty() && rng() % 4 == 0) v = system.vicinities.front();
      bool repeat = false;
      for (const auto& w : system.vicinities) repeat = repeat || w == v;
      if (m == Mode::strong && repeat) continue;
      system.vicinities.push_back(v);
    }
    space.systems.push_back(std::move(system));
  }
  return space;
}

inline Labeling random_labeling(std::mt19937_64& rng, std::size_t n, std::size_t tokens) {
  static const char* names[] = {"A", "B", "C", "D", "E", "F", "G", "H"};
  Labeling pi;
  for (std::size_t p = 0; p < n; ++p) pi.set(static_cast<Point>(p), names[rng() % tokens]);
  return pi;
}

// Every strong system on 3 points with 1 or 2 vicinities, for owner x.
inline std::vector<VicinitySystem> small_strong_systems(Point x) {
  std::vector<Vicinity> subsets;
  for (unsigned mask = 0; mask < 8; ++mask) {
    if (!(mask & (1u << x))) continue;
    std::vector<Point> members;
    for (Point p = 0; p < 3; ++p) {
      if (mask & (1u << p)) members.push_back(p);
    }
    subsets.emplace_back(members);
  }
  std::vector<VicinitySystem> out;
  for (const auto& v : subsets) out.push_back({x, Mode::strong, {v}});
  for (const auto& v : subsets) {
    for (const auto& w : subsets) {
      if (!(v == w)) out.push_back({x, Mode::strong, {v, w}});
    }
  }
  return out;
}

// A scripted oracle with a valid coding config, or nothing if the draw
// could not be made valid. Endpoints are the first pair (a, b) that the
// drawn entries leave valid, after dropping entries no config can host.
struct CodingInstance {
  EnumerationOracle oracle;
  CodedSpaceConfig config;
};

inline std::optional<CodingInstance> random_coding_instance(std::mt19937_64& rng, std::uint64_t max_points,
                                                            std::uint64_t max_stages,
                                                            std::size_t max_enumerations) {
  std::uniform_int_distribution<std::uint64_t> stages(2, max_stages);
  std::uniform_int_distribution<std::uint64_t> points(4, max_points);
  const std::uint64_t t = stages(rng);
  const std::uint64_t m = points(rng);
  std::uniform_int_distribution<std::size_t> count(0, max_enumerations);
  std::uniform_int_distribution<std::uint64_t> xs(0, std::min<std::uint64_t>(m, 20));
  std::uniform_int_distribution<std::uint64_t> ss(0, t);
  std::map<std::uint64_t, std::uint64_t> entries;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) entries.emplace(xs(rng), ss(rng));
  for (Point a = 0; a < 4; ++a) {
    for (Point b = a + 1; b <= std::min<std::uint64_t>(m, 12); ++b) {
      // Drop entries the config cannot host rather than rejecting the draw.
      std::map<std::uint64_t, std::uint64_t> kept;
      for (auto [x, s] : entries) {
        if (x == a || x == b || (x == 0 && s == 0) || s + 2 > t) continue;
        if (vspace::pair(x, s + 1) > m) continue;
        kept.emplace(x, s);
      }
      CodingInstance inst{EnumerationOracle(t, kept), {a, b, m, t}};
      if (config_problems(inst.oracle, inst.config).empty()) return inst;
    }
  }
  return std::nullopt;
}

// First endpoints (a < b <= 40) giving a valid config for a fixed oracle.
inline std::optional<CodedSpaceConfig> first_valid_config(const EnumerationOracle& oracle, std::uint64_t m,
                                                          std::uint64_t t) {
  for (Point a = 0; a < 40; ++a) {
    for (Point b = a + 1; b <= std::min<std::uint64_t>(m, 40); ++b) {
      const CodedSpaceConfig config{a, b, m, t};
      if (config_problems(oracle, config).empty()) return config;
    }
  }
  return std::nullopt;
}

// Random register-machine program of 1..max_length instructions; jump
// targets may point one past the end.
inline Program random_program(std::mt19937_64& rng, std::size_t max_length) {
  const std::size_t length = 1 + rng() % max_length;
  Program program;
  for (std::size_t i = 0; i < length; ++i) {
    const unsigned reg = static_cast<unsigned>(rng() % kRegisterCount);
    switch (rng() % 3) {
      case 0:
        program.push_back({Opcode::inc, reg, 0});
        break;
      case 1:
        program.push_back({Opcode::decjz, reg, static_cast<std::size_t>(rng() % (length + 1))});
        break;
      default:
        program.push_back({Opcode::halt, 0, 0});
        break;
    }
  }
  return program;
}

}  // namespace vspace::testing
