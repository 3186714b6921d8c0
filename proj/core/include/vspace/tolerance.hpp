#pragma once

// Constancy of labelings over vicinities, and checkers for the two
// sorites theorems: connectedness forces an intolerant point, and a
// labeling's own induced space never connects differently labeled points.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "vspace/connectivity.hpp"
#include "vspace/space.hpp"

namespace vspace {

bool constant_on(const Labeling& pi, const Vicinity& vicinity);

struct ToleranceReport {
  std::vector<Point> violations;                  // no constant vicinity
  std::map<Point, std::size_t> tolerant_indices;  // least constant index

  bool tolerant() const { return violations.empty(); }
};

ToleranceReport tolerance_report(const FiniteVSpace& space, const Labeling& pi);

enum class TheoremStatus { holds, not_applicable, refuted };

std::string_view to_string(TheoremStatus status);

struct TheoremOutcome {
  TheoremStatus status = TheoremStatus::holds;
  std::string reason;           // failing hypothesis for not_applicable
  std::vector<Point> evidence;  // intolerant points for check_nontol
};

// If a and b are connected and labeled differently, some point has no
// constant vicinity. Reasons: "not-connected", "equal-labels".
TheoremOutcome check_nontol(const FiniteVSpace& space, const Labeling& pi, Point a, Point b,
                            const SearchOptions& options = {});

// Least constant vicinity per point. Throws ValidationError if some point
// has none.
Cover tolerant_cover(const FiniteVSpace& space, const Labeling& pi);

// Differently labeled points are not connected in the induced space.
// Throws ValidationError if pi(a) == pi(b).
TheoremOutcome check_nonconn(std::size_t point_count, const Labeling& pi, Point a, Point b);

struct RefutationStep {
  Point from = 0;
  Point to = 0;
  Point least_common = 0;  // least element of both label classes
  std::string label;       // its label, equal to both endpoints' labels
};

struct RefutationTrace {
  std::vector<RefutationStep> steps;
  std::string start_label;  // pi(a)
  std::string end_label;    // pi(b), forced equal to start_label
};

// Walks a candidate chain in the induced space: each consecutive pair of
// classes has a least common element whose label equals both neighbours',
// so the label is carried unchanged from the first point to the last.
// Throws ValidationError if some consecutive classes are disjoint.
RefutationTrace refute_chain_in_induced(std::size_t point_count, const Labeling& pi,
                                        const Chain& chain);

}  // namespace vspace
