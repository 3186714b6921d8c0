#pragma once

// Covers, overlap graphs, chains, and the decision "are a and b connected",
// i.e. does every cover admit a chain from a to b.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vspace/space.hpp"

namespace vspace {

// One vicinity index per point. For weak systems, indices past the end
// denote vicinity 0.
struct Cover {
  std::vector<std::size_t> choices;

  friend bool operator==(const Cover&, const Cover&) = default;
};

// a = x_0, ..., x_k = b with consecutive chosen vicinities intersecting.
using Chain = std::vector<Point>;

struct OverlapGraph {
  std::size_t node_count = 0;
  std::vector<std::pair<Point, Point>> edges;  // (x, y) with x < y, sorted
  std::vector<std::vector<Point>> adjacency;   // sorted neighbour lists
};

// Throws ValidationError when the cover does not fit the space.
void require_valid_cover(const FiniteVSpace& space, const Cover& cover);

OverlapGraph overlap_graph(const FiniteVSpace& space, const Cover& cover);

// A shortest chain from a to b under the cover; ties go to smaller ids.
std::optional<Chain> chain_exists(const FiniteVSpace& space, const Cover& cover, Point a, Point b);

// True iff the cover admits no chain from a to b.
bool verify_witness(const FiniteVSpace& space, const Cover& cover, Point a, Point b);

enum class Engine { brute, pruned };

inline constexpr std::uint64_t kDefaultMaxCovers = std::uint64_t{1} << 24;

struct SearchOptions {
  Engine engine = Engine::brute;
  // Brute: maximum number of covers enumerated. Pruned: maximum number of
  // search nodes expanded. Exceeding it throws BudgetExceeded.
  std::uint64_t max_covers = kDefaultMaxCovers;
  // Collapse identical vicinity sets within a system before searching.
  bool dedup = true;
};

struct ConnectivityVerdict {
  // Absent when connected; otherwise a cover admitting no a-b chain.
  std::optional<Cover> witness;
  // Covers (brute) or search nodes (pruned) visited.
  std::uint64_t explored = 0;

  bool connected() const { return !witness.has_value(); }
};

// Number of covers the brute engine would enumerate, saturating at
// UINT64_MAX.
std::uint64_t cover_count(const FiniteVSpace& space, bool dedup = true);

// Brute enumerates covers lexicographically by (point id, index), the last
// point varying fastest, and returns the first witness found. Pruned
// branches only on points whose choice can still change the component of a
// and may return a different witness; verdicts always agree.
ConnectivityVerdict is_connected(const FiniteVSpace& space, Point a, Point b,
                                 const SearchOptions& options = {});

}  // namespace vspace
