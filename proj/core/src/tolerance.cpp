#include "vspace/tolerance.hpp"

#include <string>

#include "vspace/error.hpp"

namespace vspace {

bool constant_on(const Labeling& pi, const Vicinity& vicinity) {
  if (vicinity.empty()) return true;
  const std::string& first = pi.at(vicinity.members().front());
  for (Point m : vicinity.members()) {
    if (pi.at(m) != first) return false;
  }
  return true;
}

ToleranceReport tolerance_report(const FiniteVSpace& space, const Labeling& pi) {
  require_valid(space);
  pi.require_total(space.point_count);
  ToleranceReport report;
  for (std::size_t p = 0; p < space.point_count; ++p) {
    const auto& system = space.systems[p];
    bool found = false;
    for (std::size_t i = 0; i < system.size() && !found; ++i) {
      if (constant_on(pi, system.vicinities[i])) {
        report.tolerant_indices.emplace(static_cast<Point>(p), i);
        found = true;
      }
    }
    if (!found) report.violations.push_back(static_cast<Point>(p));
  }
  return report;
}

std::string_view to_string(TheoremStatus status) {
  switch (status) {
    case TheoremStatus::holds: return "holds";
    case TheoremStatus::not_applicable: return "notapplicable";
    case TheoremStatus::refuted: return "refuted";
  }
  return "unknown";
}

TheoremOutcome check_nontol(const FiniteVSpace& space, const Labeling& pi, Point a, Point b,
                            const SearchOptions& options) {
  const auto report = tolerance_report(space, pi);
  if (!space.has_point(a) || !space.has_point(b)) throw ValidationError("endpoint not in space");
  if (pi.at(a) == pi.at(b)) return {TheoremStatus::not_applicable, "equal-labels", {}};
  if (!is_connected(space, a, b, options).connected()) {
    return {TheoremStatus::not_applicable, "not-connected", {}};
  }
  if (report.violations.empty()) return {TheoremStatus::refuted, "every point is tolerant", {}};
  return {TheoremStatus::holds, {}, report.violations};
}

Cover tolerant_cover(const FiniteVSpace& space, const Labeling& pi) {
  const auto report = tolerance_report(space, pi);
  if (!report.violations.empty()) {
    throw ValidationError("point " + std::to_string(report.violations.front()) +
                          " has no vicinity on which the labeling is constant");
  }
  Cover cover;
  cover.choices.reserve(space.point_count);
  for (const auto& [point, index] : report.tolerant_indices) cover.choices.push_back(index);
  return cover;
}

TheoremOutcome check_nonconn(std::size_t point_count, const Labeling& pi, Point a, Point b) {
  if (a >= point_count || b >= point_count) throw ValidationError("endpoint not in space");
  pi.require_total(point_count);
  if (pi.at(a) == pi.at(b)) {
    throw ValidationError("labels of " + std::to_string(a) + " and " + std::to_string(b) +
                          " are equal");
  }
  const auto space = induced_space(point_count, pi);
  const auto verdict = is_connected(space, a, b);
  const Cover unique{std::vector<std::size_t>(point_count, 0)};
  if (verdict.connected() || *verdict.witness != unique || !verify_witness(space, unique, a, b)) {
    return {TheoremStatus::refuted, "induced space connects the endpoints", {}};
  }
  return {TheoremStatus::holds, {}, {}};
}

RefutationTrace refute_chain_in_induced(std::size_t point_count, const Labeling& pi,
                                        const Chain& chain) {
  if (chain.empty()) throw ValidationError("empty chain");
  for (Point p : chain) {
    if (p >= point_count) throw ValidationError("chain point " + std::to_string(p) + " not in space");
  }
  const auto space = induced_space(point_count, pi);
  RefutationTrace trace;
  trace.start_label = pi.at(chain.front());
  std::string carried = trace.start_label;
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    const auto& here = space.systems[chain[j]].vicinities.front();
    const auto& next = space.systems[chain[j + 1]].vicinities.front();
    const auto least = here.least_common(next);
    if (!least) {
      throw ValidationError("not a chain: classes of " + std::to_string(chain[j]) + " and " +
                            std::to_string(chain[j + 1]) + " are disjoint");
    }
    // Membership in both classes pins the label on both sides.
    carried = pi.at(*least);
    trace.steps.push_back({chain[j], chain[j + 1], *least, carried});
  }
  trace.end_label = carried;
  return trace;
}

}  // namespace vspace
