#include "vspace/space.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "vspace/error.hpp"

namespace vspace {

std::string_view to_string(Mode mode) {
  return mode == Mode::weak ? "weak" : "strong";
}

Vicinity::Vicinity(std::initializer_list<Point> members)
    : Vicinity(std::vector<Point>(members)) {}

Vicinity::Vicinity(std::vector<Point> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Vicinity::contains(Point p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

bool Vicinity::intersects(const Vicinity& other) const {
  return least_common(other).has_value();
}

std::optional<Point> Vicinity::least_common(const Vicinity& other) const {
  auto i = members_.begin();
  auto j = other.members_.begin();
  while (i != members_.end() && j != other.members_.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return *i;
    }
  }
  return std::nullopt;
}

std::size_t VicinitySystem::resolve(std::size_t index) const {
  if (vicinities.empty()) {
    throw ValidationError("point " + std::to_string(owner) + " has no vicinities");
  }
  if (index < vicinities.size()) return index;
  if (mode == Mode::weak) return 0;
  throw ValidationError("vicinity index " + std::to_string(index) + " out of range for point " +
                        std::to_string(owner) + " (" + std::to_string(vicinities.size()) +
                        " vicinities)");
}

bool is_valid_label(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Labeling::Labeling(const std::vector<std::string>& by_point) {
  for (std::size_t p = 0; p < by_point.size(); ++p) set(static_cast<Point>(p), by_point[p]);
}

void Labeling::set(Point p, std::string token) {
  if (!is_valid_label(token)) throw ValidationError("invalid label token '" + token + "'");
  labels_[p] = std::move(token);
}

const std::string& Labeling::at(Point p) const {
  auto it = labels_.find(p);
  if (it == labels_.end()) throw ValidationError("no label for point " + std::to_string(p));
  return it->second;
}

std::optional<Point> Labeling::first_undefined(std::size_t point_count) const {
  for (std::size_t p = 0; p < point_count; ++p) {
    if (!defined(static_cast<Point>(p))) return static_cast<Point>(p);
  }
  return std::nullopt;
}

void Labeling::require_total(std::size_t point_count) const {
  if (auto p = first_undefined(point_count)) {
    throw ValidationError("labeling undefined on point " + std::to_string(*p));
  }
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::missing_system: return "missing-system";
    case ViolationKind::extra_system: return "extra-system";
    case ViolationKind::owner_mismatch: return "owner-mismatch";
    case ViolationKind::mode_mismatch: return "mode-mismatch";
    case ViolationKind::empty_system: return "empty-system";
    case ViolationKind::owner_not_in_vicinity: return "owner-not-in-vicinity";
    case ViolationKind::member_out_of_range: return "member-out-of-range";
    case ViolationKind::duplicate_vicinity: return "duplicate-vicinity";
  }
  return "unknown";
}

std::string describe(const Violation& v) {
  std::string out = std::string(to_string(v.kind)) + " point " + std::to_string(v.point);
  if (v.index) out += " index " + std::to_string(*v.index);
  if (v.member) out += " member " + std::to_string(*v.member);
  return out;
}

std::vector<Violation> validate_system(const VicinitySystem& system) {
  std::vector<Violation> out;
  if (system.vicinities.empty()) {
    out.push_back({ViolationKind::empty_system, system.owner, std::nullopt, std::nullopt});
    return out;
  }
  for (std::size_t i = 0; i < system.vicinities.size(); ++i) {
    if (!system.vicinities[i].contains(system.owner)) {
      out.push_back({ViolationKind::owner_not_in_vicinity, system.owner, i, std::nullopt});
    }
  }
  if (system.mode == Mode::strong) {
    for (std::size_t i = 1; i < system.vicinities.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (system.vicinities[i] == system.vicinities[j]) {
          out.push_back({ViolationKind::duplicate_vicinity, system.owner, i, std::nullopt});
          break;
        }
      }
    }
  }
  return out;
}

std::vector<Violation> validate_space(const FiniteVSpace& space) {
  std::vector<Violation> out;
  const std::size_t n = space.point_count;
  for (std::size_t p = 0; p < space.systems.size(); ++p) {
    const auto& system = space.systems[p];
    const auto point = static_cast<Point>(p);
    if (p >= n) {
      out.push_back({ViolationKind::extra_system, point, std::nullopt, std::nullopt});
      continue;
    }
    if (system.owner != point) {
      out.push_back({ViolationKind::owner_mismatch, point, std::nullopt, system.owner});
    }
    if (system.mode != space.mode) {
      out.push_back({ViolationKind::mode_mismatch, point, std::nullopt, std::nullopt});
    }
    auto own = validate_system(system);
    // Report against the key, not a possibly mismatched owner field.
    for (auto& v : own) v.point = point;
    out.insert(out.end(), own.begin(), own.end());
    for (std::size_t i = 0; i < system.vicinities.size(); ++i) {
      for (Point m : system.vicinities[i].members()) {
        if (m >= n) out.push_back({ViolationKind::member_out_of_range, point, i, m});
      }
    }
  }
  for (std::size_t p = space.systems.size(); p < n; ++p) {
    out.push_back({ViolationKind::missing_system, static_cast<Point>(p), std::nullopt, std::nullopt});
  }
  return out;
}

void require_valid(const FiniteVSpace& space) {
  auto violations = validate_space(space);
  if (!violations.empty()) throw ValidationError("invalid space: " + describe(violations.front()));
}

namespace {

void require_valid_system(const VicinitySystem& system, Mode expected) {
  if (system.mode != expected) {
    throw ValidationError("expected a " + std::string(to_string(expected)) + " system for point " +
                          std::to_string(system.owner));
  }
  auto violations = validate_system(system);
  if (!violations.empty()) throw ValidationError("invalid system: " + describe(violations.front()));
}

}  // namespace

VicinitySystem weak_from_strong(const VicinitySystem& system) {
  require_valid_system(system, Mode::strong);
  VicinitySystem out = system;
  out.mode = Mode::weak;
  return out;
}

VicinitySystem strong_from_weak(const VicinitySystem& system) {
  require_valid_system(system, Mode::weak);
  VicinitySystem out{system.owner, Mode::strong, {}};
  for (std::size_t i : distinct_indices(system)) out.vicinities.push_back(system.vicinities[i]);
  return out;
}

FiniteVSpace induced_space(std::size_t point_count, const Labeling& pi) {
  pi.require_total(point_count);
  std::map<std::string, std::vector<Point>> classes;
  for (std::size_t p = 0; p < point_count; ++p) {
    classes[pi.at(static_cast<Point>(p))].push_back(static_cast<Point>(p));
  }
  FiniteVSpace space{Mode::strong, point_count, {}};
  space.systems.reserve(point_count);
  for (std::size_t p = 0; p < point_count; ++p) {
    const auto point = static_cast<Point>(p);
    space.systems.push_back({point, Mode::strong, {Vicinity(classes.at(pi.at(point)))}});
  }
  return space;
}

std::vector<std::size_t> distinct_indices(const VicinitySystem& system) {
  std::vector<std::size_t> out;
  std::set<const Vicinity*, bool (*)(const Vicinity*, const Vicinity*)> seen(
      [](const Vicinity* l, const Vicinity* r) { return *l < *r; });
  for (std::size_t i = 0; i < system.vicinities.size(); ++i) {
    if (seen.insert(&system.vicinities[i]).second) out.push_back(i);
  }
  return out;
}

}  // namespace vspace
