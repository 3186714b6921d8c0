#include "vspace/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "vspace/error.hpp"

namespace vspace {

void require_valid_cover(const FiniteVSpace& space, const Cover& cover) {
  if (cover.choices.size() != space.point_count) {
    throw ValidationError("cover has " + std::to_string(cover.choices.size()) + " choices for " +
                          std::to_string(space.point_count) + " points");
  }
  for (std::size_t p = 0; p < space.point_count; ++p) {
    space.systems.at(p).resolve(cover.choices[p]);
  }
}

namespace {

void require_point(const FiniteVSpace& space, Point p) {
  if (!space.has_point(p)) throw ValidationError("point " + std::to_string(p) + " is not in the space");
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t x, std::size_t y) { parent_[find(x)] = find(y); }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::vector<std::size_t>> choice_options(const FiniteVSpace& space, bool dedup) {
  std::vector<std::vector<std::size_t>> options(space.point_count);
  for (std::size_t p = 0; p < space.point_count; ++p) {
    const auto& system = space.systems[p];
    if (dedup) {
      options[p] = distinct_indices(system);
    } else {
      options[p].resize(system.size());
      std::iota(options[p].begin(), options[p].end(), 0);
    }
  }
  return options;
}

std::uint64_t saturating_product(const std::vector<std::vector<std::size_t>>& options) {
  std::uint64_t total = 1;
  for (const auto& o : options) {
    const std::uint64_t k = o.size();
    if (k != 0 && total > std::numeric_limits<std::uint64_t>::max() / k) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= k;
  }
  return total;
}

// Links every pair of points whose chosen vicinities share a member.
bool linked_under(const FiniteVSpace& space, const std::vector<const Vicinity*>& chosen, Point a,
                  Point b) {
  DisjointSets sets(space.point_count);
  std::vector<std::size_t> first_holder(space.point_count, std::numeric_limits<std::size_t>::max());
  for (std::size_t x = 0; x < chosen.size(); ++x) {
    for (Point m : chosen[x]->members()) {
      if (first_holder[m] == std::numeric_limits<std::size_t>::max()) {
        first_holder[m] = x;
      } else {
        sets.unite(x, first_holder[m]);
      }
    }
  }
  return sets.find(a) == sets.find(b);
}

ConnectivityVerdict brute_search(const FiniteVSpace& space, Point a, Point b,
                                 const SearchOptions& options) {
  const auto choices = choice_options(space, options.dedup);
  const std::uint64_t total = saturating_product(choices);
  if (total > options.max_covers) {
    throw BudgetExceeded("brute search needs " +
                         (total == std::numeric_limits<std::uint64_t>::max()
                              ? std::string("more than 2^64")
                              : std::to_string(total)) +
                         " covers, budget is " + std::to_string(options.max_covers));
  }
  const std::size_t n = space.point_count;
  std::vector<std::size_t> digit(n, 0);
  std::vector<const Vicinity*> chosen(n);
  for (std::size_t p = 0; p < n; ++p) chosen[p] = &space.systems[p].vicinities[choices[p][0]];

  ConnectivityVerdict verdict;
  while (true) {
    ++verdict.explored;
    if (!linked_under(space, chosen, a, b)) {
      Cover witness;
      witness.choices.resize(n);
      for (std::size_t p = 0; p < n; ++p) witness.choices[p] = choices[p][digit[p]];
      verdict.witness = std::move(witness);
      return verdict;
    }
    // Advance the odometer; the last point varies fastest.
    std::size_t p = n;
    while (p > 0) {
      --p;
      if (++digit[p] < choices[p].size()) {
        chosen[p] = &space.systems[p].vicinities[choices[p][digit[p]]];
        break;
      }
      digit[p] = 0;
      chosen[p] = &space.systems[p].vicinities[choices[p][0]];
      if (p == 0) return verdict;
    }
    if (n == 0) return verdict;
  }
}

// Branch-and-prune over partial covers. For a partial assignment, an edge
// is "must" if it is present under every completion and "may" if under
// some. If b lies in the must-component of a, no completion is a witness.
// If no may-edge leaves that component, every completion is a witness.
// Otherwise branch on an unassigned endpoint of a boundary may-edge.
class PrunedSearch {
 public:
  PrunedSearch(const FiniteVSpace& space, Point a, Point b, const SearchOptions& options)
      : space_(space), a_(a), b_(b), budget_(options.max_covers),
        options_(choice_options(space, options.dedup)) {
    const std::size_t n = space.point_count;
    offset_.resize(n + 1, 0);
    for (std::size_t p = 0; p < n; ++p) offset_[p + 1] = offset_[p] + options_[p].size();
    const std::size_t nodes = offset_[n];
    const std::size_t point_words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> member_bits(nodes, std::vector<std::uint64_t>(point_words));
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t k = 0; k < options_[p].size(); ++k) {
        for (Point m : space.systems[p].vicinities[options_[p][k]].members()) {
          member_bits[offset_[p] + k][m / 64] |= std::uint64_t{1} << (m % 64);
        }
      }
    }
    node_words_ = (nodes + 63) / 64;
    meet_.assign(nodes * node_words_, 0);
    for (std::size_t i = 0; i < nodes; ++i) {
      for (std::size_t j = i; j < nodes; ++j) {
        bool hit = false;
        for (std::size_t w = 0; w < point_words && !hit; ++w) hit = (member_bits[i][w] & member_bits[j][w]) != 0;
        if (hit) {
          set_meet(i, j);
          set_meet(j, i);
        }
      }
    }
    slot_.assign(n, kUnassigned);
    for (std::size_t p = 0; p < n; ++p) {
      if (options_[p].size() == 1) slot_[p] = 0;
    }
  }

  ConnectivityVerdict run() {
    ConnectivityVerdict verdict;
    if (search()) {
      Cover witness;
      witness.choices.resize(space_.point_count);
      for (std::size_t p = 0; p < space_.point_count; ++p) {
        witness.choices[p] = options_[p][slot_[p] == kUnassigned ? 0 : slot_[p]];
      }
      verdict.witness = std::move(witness);
    }
    verdict.explored = explored_;
    return verdict;
  }

 private:
  static constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

  enum class Edge { none, may, must };

  void set_meet(std::size_t i, std::size_t j) { meet_[i * node_words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  bool meets(std::size_t i, std::size_t j) const {
    return (meet_[i * node_words_ + j / 64] >> (j % 64)) & 1u;
  }

  Edge classify(std::size_t u, std::size_t v) const {
    const std::size_t u_lo = slot_[u] == kUnassigned ? 0 : slot_[u];
    const std::size_t u_hi = slot_[u] == kUnassigned ? options_[u].size() : slot_[u] + 1;
    const std::size_t v_lo = slot_[v] == kUnassigned ? 0 : slot_[v];
    const std::size_t v_hi = slot_[v] == kUnassigned ? options_[v].size() : slot_[v] + 1;
    bool any = false;
    bool all = true;
    for (std::size_t i = u_lo; i < u_hi; ++i) {
      for (std::size_t j = v_lo; j < v_hi; ++j) {
        if (meets(offset_[u] + i, offset_[v] + j)) {
          any = true;
        } else {
          all = false;
        }
      }
    }
    if (all) return Edge::must;
    return any ? Edge::may : Edge::none;
  }

  bool search() {
    if (++explored_ > budget_) {
      throw BudgetExceeded("pruned search exceeded " + std::to_string(budget_) + " nodes");
    }
    const std::size_t n = space_.point_count;
    std::vector<char> in_component(n, 0);
    std::deque<std::size_t> queue{a_};
    std::vector<std::size_t> component{a_};
    in_component[a_] = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (in_component[v] || classify(u, v) != Edge::must) continue;
        in_component[v] = 1;
        component.push_back(v);
        queue.push_back(v);
      }
    }
    if (in_component[b_]) return false;

    std::size_t branch = kUnassigned;
    auto consider = [&](std::size_t w) {
      if (slot_[w] != kUnassigned || options_[w].size() < 2) return;
      if (branch == kUnassigned || options_[w].size() < options_[branch].size() ||
          (options_[w].size() == options_[branch].size() && w < branch)) {
        branch = w;
      }
    };
    for (std::size_t u : component) {
      for (std::size_t v = 0; v < n; ++v) {
        if (in_component[v] || classify(u, v) == Edge::none) continue;
        consider(u);
        consider(v);
      }
    }
    if (branch == kUnassigned) return true;

    for (std::size_t k = 0; k < options_[branch].size(); ++k) {
      slot_[branch] = k;
      if (search()) return true;
    }
    slot_[branch] = kUnassigned;
    return false;
  }

  const FiniteVSpace& space_;
  Point a_;
  Point b_;
  std::uint64_t budget_;
  std::uint64_t explored_ = 0;
  std::vector<std::vector<std::size_t>> options_;
  std::vector<std::size_t> offset_;
  std::size_t node_words_ = 0;
  std::vector<std::uint64_t> meet_;
  std::vector<std::size_t> slot_;
};

}  // namespace

OverlapGraph overlap_graph(const FiniteVSpace& space, const Cover& cover) {
  require_valid_cover(space, cover);
  const std::size_t n = space.point_count;
  OverlapGraph graph;
  graph.node_count = n;
  graph.adjacency.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& vx = space.systems[x].at(cover.choices[x]);
    for (std::size_t y = x + 1; y < n; ++y) {
      if (vx.intersects(space.systems[y].at(cover.choices[y]))) {
        graph.edges.emplace_back(static_cast<Point>(x), static_cast<Point>(y));
        graph.adjacency[x].push_back(static_cast<Point>(y));
        graph.adjacency[y].push_back(static_cast<Point>(x));
      }
    }
  }
  for (auto& list : graph.adjacency) std::sort(list.begin(), list.end());
  return graph;
}

std::optional<Chain> chain_exists(const FiniteVSpace& space, const Cover& cover, Point a, Point b) {
  require_point(space, a);
  require_point(space, b);
  const auto graph = overlap_graph(space, cover);
  constexpr Point kNone = std::numeric_limits<Point>::max();
  std::vector<Point> parent(space.point_count, kNone);
  std::vector<char> seen(space.point_count, 0);
  std::deque<Point> queue{a};
  seen[a] = 1;
  while (!queue.empty()) {
    const Point u = queue.front();
    queue.pop_front();
    if (u == b) break;
    for (Point v : graph.adjacency[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      parent[v] = u;
      queue.push_back(v);
    }
  }
  if (!seen[b]) return std::nullopt;
  Chain chain{b};
  for (Point p = b; p != a; p = parent[p]) chain.push_back(parent[p]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

bool verify_witness(const FiniteVSpace& space, const Cover& cover, Point a, Point b) {
  return !chain_exists(space, cover, a, b).has_value();
}

std::uint64_t cover_count(const FiniteVSpace& space, bool dedup) {
  return saturating_product(choice_options(space, dedup));
}

ConnectivityVerdict is_connected(const FiniteVSpace& space, Point a, Point b,
                                 const SearchOptions& options) {
  require_valid(space);
  require_point(space, a);
  require_point(space, b);
  if (a == b) return {};
  if (options.engine == Engine::brute) return brute_search(space, a, b, options);
  return PrunedSearch(space, a, b, options).run();
}

}  // namespace vspace
