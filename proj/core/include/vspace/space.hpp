#pragma once

// Finite Frechet V-spaces: points 0..N-1, each with an ordered, non-empty
// list of vicinities (subsets of the point set that contain the owner).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vspace {

using Point = std::uint32_t;

// Weak systems may repeat a vicinity; strong systems may not.
enum class Mode { weak, strong };

std::string_view to_string(Mode mode);

// An extensional set of points, stored sorted and without repeats.
class Vicinity {
 public:
  Vicinity() = default;
  Vicinity(std::initializer_list<Point> members);
  explicit Vicinity(std::vector<Point> members);

  const std::vector<Point>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(Point p) const;
  bool intersects(const Vicinity& other) const;
  // Smallest point in both sets, if any.
  std::optional<Point> least_common(const Vicinity& other) const;

  friend bool operator==(const Vicinity&, const Vicinity&) = default;
  friend auto operator<=>(const Vicinity&, const Vicinity&) = default;

 private:
  std::vector<Point> members_;
};

// The ordered vicinities of one point. For weak systems an index past the
// end denotes vicinity 0, standing in for the padding of a finite prefix
// out to an infinite sequence.
struct VicinitySystem {
  Point owner = 0;
  Mode mode = Mode::strong;
  std::vector<Vicinity> vicinities;

  std::size_t size() const { return vicinities.size(); }

  // Applies the weak padding convention. Throws ValidationError for an
  // out-of-range index in a strong system or for an empty system.
  std::size_t resolve(std::size_t index) const;
  const Vicinity& at(std::size_t index) const { return vicinities[resolve(index)]; }
};

// Not validated on construction: validate_space() reports what is wrong
// with an arbitrary candidate. Operations that need a valid space check it.
struct FiniteVSpace {
  Mode mode = Mode::strong;
  std::size_t point_count = 0;
  std::vector<VicinitySystem> systems;  // indexed by owner

  bool has_point(Point p) const { return p < point_count; }
  const VicinitySystem& system(Point p) const { return systems.at(p); }
};

// Labels are non-empty tokens over [A-Za-z0-9_].
bool is_valid_label(std::string_view token);

// A labeling of points with opaque tokens. May be partial while being
// assembled; operations that need totality check it.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(const std::vector<std::string>& by_point);

  void set(Point p, std::string token);
  bool defined(Point p) const { return labels_.count(p) != 0; }
  const std::string& at(Point p) const;
  // First point of 0..point_count-1 without a label.
  std::optional<Point> first_undefined(std::size_t point_count) const;
  void require_total(std::size_t point_count) const;

  const std::map<Point, std::string>& entries() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::map<Point, std::string> labels_;
};

enum class ViolationKind {
  missing_system,
  extra_system,
  owner_mismatch,
  mode_mismatch,
  empty_system,
  owner_not_in_vicinity,
  member_out_of_range,
  duplicate_vicinity,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  Point point = 0;
  std::optional<std::size_t> index;  // vicinity index, when relevant
  std::optional<Point> member;       // offending member, when relevant

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string describe(const Violation& v);

// Checks a single system in isolation (non-empty, owner containment, and
// distinctness in strong mode). Point-range checks need the whole space.
std::vector<Violation> validate_system(const VicinitySystem& system);

// All invariant violations of a candidate space, in point order. Empty
// means the space is valid.
std::vector<Violation> validate_space(const FiniteVSpace& space);

// Throws ValidationError carrying the first violation, if any.
void require_valid(const FiniteVSpace& space);

VicinitySystem weak_from_strong(const VicinitySystem& system);
// Drops repeated vicinities, keeping first occurrences in order.
VicinitySystem strong_from_weak(const VicinitySystem& system);

// Each point's single vicinity is its label class.
FiniteVSpace induced_space(std::size_t point_count, const Labeling& pi);

// Indices of the first occurrence of each distinct vicinity of a system.
std::vector<std::size_t> distinct_indices(const VicinitySystem& system);

}  // namespace vspace
