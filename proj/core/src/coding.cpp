#include "vspace/coding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "vspace/error.hpp"
#include "vspace/tolerance.hpp"

namespace vspace {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::optional<std::uint64_t> checked_pair(std::uint64_t x, std::uint64_t s) {
  if (x > kMax - s) return std::nullopt;
  const std::uint64_t w = x + s;
  // w(w+1)/2 without overflowing the intermediate product.
  std::uint64_t lo = w;
  std::uint64_t hi = w + 1;
  if (lo % 2 == 0) {
    lo /= 2;
  } else {
    hi /= 2;
  }
  if (hi != 0 && lo > kMax / hi) return std::nullopt;
  const std::uint64_t tri = lo * hi;
  if (tri > kMax - x) return std::nullopt;
  return tri + x;
}

// The pair code if it does not exceed the bound.
std::optional<std::uint64_t> code_within(std::uint64_t x, std::uint64_t s, std::uint64_t bound) {
  auto code = checked_pair(x, s);
  if (!code || *code > bound) return std::nullopt;
  return code;
}

// Stage at which x enters, if that is within the construction's stages.
std::optional<std::uint64_t> visible_stage(const EnumerationOracle& oracle,
                                           const CodedSpaceConfig& config, std::uint64_t x) {
  auto s = oracle.stage_of(x);
  if (s && *s <= config.stage_bound) return s;
  return std::nullopt;
}

std::string num(std::uint64_t v) { return std::to_string(v); }

}  // namespace

std::uint64_t pair(std::uint64_t x, std::uint64_t s) {
  auto code = checked_pair(x, s);
  if (!code) throw ValidationError("pair(" + num(x) + ", " + num(s) + ") overflows");
  return *code;
}

PairCode unpair(std::uint64_t code) {
  // w is the largest integer with w(w+1)/2 <= code.
  auto w = static_cast<std::uint64_t>((std::sqrt(8.0L * static_cast<long double>(code) + 1.0L) - 1.0L) / 2.0L);
  auto tri = [](std::uint64_t v) -> std::optional<std::uint64_t> { return checked_pair(0, v); };
  while (w > 0 && (!tri(w) || *tri(w) > code)) --w;
  while (tri(w + 1) && *tri(w + 1) <= code) ++w;
  const std::uint64_t x = code - *tri(w);
  return {x, w - x};
}

std::vector<std::string> config_problems(const EnumerationOracle& oracle,
                                         const CodedSpaceConfig& config) {
  std::vector<std::string> out;
  const std::uint64_t m = config.point_bound;
  const std::uint64_t t_bound = config.stage_bound;
  const std::uint64_t a = config.a;
  const std::uint64_t b = config.b;
  if (!(a < b && b <= m)) {
    out.push_back("endpoints must satisfy a < b <= " + num(m));
  }
  if (m >= std::numeric_limits<Point>::max()) out.push_back("point bound " + num(m) + " too large");
  if (t_bound > oracle.stage_bound()) {
    out.push_back("stage bound " + num(t_bound) + " exceeds the oracle's " + num(oracle.stage_bound()));
    return out;
  }
  for (std::uint64_t endpoint : {a, b}) {
    if (auto s = visible_stage(oracle, config, endpoint)) {
      out.push_back("endpoint " + num(endpoint) + " enumerated at stage " + num(*s));
    }
    const auto code = unpair(endpoint);
    if (auto s = visible_stage(oracle, config, code.x)) {
      if (*s == code.s || *s + 1 == code.s) {
        out.push_back("endpoint " + num(endpoint) + " is the code <" + num(code.x) + "," +
                      num(code.s) + "> of an enumerated point");
      }
    }
    if (code.s == t_bound && code.x != a && code.x != b) {
      out.push_back("endpoint " + num(endpoint) + " is the last-stage code <" + num(code.x) + "," +
                    num(code.s) + ">");
    }
  }
  for (const auto& [x, s] : oracle.entries()) {
    if (s > t_bound || x > m) continue;
    if (x == 0 && s == 0) out.push_back("point 0 enumerated at stage 0 puts 1 into b's vicinity");
    if (s + 2 > t_bound) {
      out.push_back("point " + num(x) + " enumerated at stage " + num(s) + " needs stage bound >= " +
                    num(s + 2));
    }
    if (!code_within(x, s, m) || !code_within(x, s + 1, m)) {
      out.push_back("point bound " + num(m) + " cannot hold <" + num(x) + "," + num(s) + "> and <" +
                    num(x) + "," + num(s + 1) + ">");
    }
  }
  return out;
}

namespace {

void require_valid_config(const EnumerationOracle& oracle, const CodedSpaceConfig& config) {
  auto problems = config_problems(oracle, config);
  if (!problems.empty()) throw ValidationError("invalid coding config: " + problems.front());
}

}  // namespace

CodedSpace build_coded_space(const EnumerationOracle& oracle, const CodedSpaceConfig& config) {
  require_valid_config(oracle, config);
  const std::uint64_t m = config.point_bound;
  const std::size_t n = static_cast<std::size_t>(m) + 1;

  std::vector<Point> near_a{config.a};
  std::vector<Point> near_b{config.b};
  for (const auto& [x, s] : oracle.entries()) {
    if (s > config.stage_bound || x > m) continue;
    near_a.push_back(static_cast<Point>(pair(x, s)));
    near_b.push_back(static_cast<Point>(pair(x, s + 1)));
  }

  CodedSpace coded;
  coded.config = config;
  coded.space = FiniteVSpace{Mode::strong, n, {}};
  coded.space.systems.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    const auto x = static_cast<Point>(p);
    VicinitySystem system{x, Mode::strong, {}};
    if (x == config.a) {
      system.vicinities.emplace_back(near_a);
    } else if (x == config.b) {
      system.vicinities.emplace_back(near_b);
    } else {
      // Codes <x,t> grow with t, so the surviving ones are a prefix.
      std::vector<Point> codes;
      for (std::uint64_t t = 0; t <= config.stage_bound; ++t) {
        auto code = code_within(x, t, m);
        if (!code) break;
        codes.push_back(static_cast<Point>(*code));
      }
      for (std::size_t k = 0; k < codes.size(); ++k) {
        std::vector<Point> members{x};
        members.insert(members.end(), codes.begin() + static_cast<std::ptrdiff_t>(k), codes.end());
        system.vicinities.emplace_back(std::move(members));
      }
      if (codes.size() <= config.stage_bound) system.vicinities.push_back(Vicinity{x});
      system = strong_from_weak({x, Mode::weak, std::move(system.vicinities)});
    }
    coded.space.systems.push_back(std::move(system));
  }
  coded.pi = build_pi(oracle, config);
  return coded;
}

Labeling build_pi(const EnumerationOracle& oracle, const CodedSpaceConfig& config) {
  require_valid_config(oracle, config);
  const std::size_t n = static_cast<std::size_t>(config.point_bound) + 1;
  std::vector<int> label(n, -1);
  label[config.a] = 0;
  label[config.b] = 1;
  if (label[0] < 0) label[0] = 0;
  if (label[1] < 0) label[1] = 0;
  for (std::size_t y = 2; y < n; ++y) {
    if (label[y] >= 0) continue;
    const auto [x, s] = unpair(y);
    const auto entered = visible_stage(oracle, config, x);
    if (entered && *entered == s) {
      label[y] = 0;
    } else if (entered && s >= 1 && *entered == s - 1) {
      label[y] = 1;
    } else {
      label[y] = label[x];  // x < y
    }
  }
  Labeling pi;
  for (std::size_t y = 0; y < n; ++y) pi.set(static_cast<Point>(y), label[y] ? "1" : "0");
  return pi;
}

std::vector<Point> members(const Decoding& decoding) {
  std::vector<Point> out;
  for (const auto& [x, m] : decoding) {
    if (m == Membership::in) out.push_back(x);
  }
  return out;
}

Decoding decode_from_cover(const FiniteVSpace& space, Point a, Point b, const Cover& cover) {
  require_valid(space);
  require_valid_cover(space, cover);
  if (!verify_witness(space, cover, a, b)) {
    throw ValidationError("cover does not witness that " + std::to_string(a) + " and " +
                          std::to_string(b) + " are not connected");
  }
  const std::uint64_t m = space.point_count - 1;
  const Vicinity& near_a = space.systems[a].vicinities.front();
  Decoding out;
  for (std::size_t p = 0; p < space.point_count; ++p) {
    const auto x = static_cast<Point>(p);
    if (x == a || x == b) continue;
    const Vicinity& chosen = space.systems[p].at(cover.choices[p]);
    // <0,0> is the owner 0 itself and lies in every V_{0,n}.
    std::uint64_t t = x == 0 ? 1 : 0;
    while (true) {
      auto code = code_within(x, t, m);
      if (!code || chosen.contains(static_cast<Point>(*code))) break;
      ++t;
    }
    bool entered = false;
    for (std::uint64_t s = 0; s <= t && !entered; ++s) {
      auto code = code_within(x, s, m);
      if (!code) break;
      // V_a minus its owner is exactly the set of codes <x,s> with x entering at s.
      entered = *code != a && near_a.contains(static_cast<Point>(*code));
    }
    out.emplace(x, entered ? Membership::in : Membership::out);
  }
  return out;
}

Decoding decode_from_cover(const CodedSpace& coded, const Cover& cover) {
  return decode_from_cover(coded.space, coded.config.a, coded.config.b, cover);
}

bool RoundtripReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RoundtripCheck& c) { return c.passed; });
}

namespace {

std::string join(const std::vector<Point>& points) {
  std::string out;
  for (Point p : points) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p);
  }
  return out;
}

}  // namespace

RoundtripReport verify_roundtrip(const EnumerationOracle& oracle, const CodedSpaceConfig& config) {
  const auto coded = build_coded_space(oracle, config);
  const Point a = config.a;
  const Point b = config.b;
  RoundtripReport report;

  const bool differ = coded.pi.at(a) != coded.pi.at(b);
  report.checks.push_back({"labels-differ", differ, coded.pi.at(a) + " " + coded.pi.at(b)});

  const auto tolerance = tolerance_report(coded.space, coded.pi);
  report.checks.push_back({"tolerance", tolerance.tolerant(),
                           tolerance.tolerant() ? "" : "intolerant: " + join(tolerance.violations)});
  if (!tolerance.tolerant()) return report;

  const Cover cover = tolerant_cover(coded.space, coded.pi);
  const bool witness = verify_witness(coded.space, cover, a, b);
  report.checks.push_back({"witness", witness, ""});
  if (!witness) return report;

  const auto decoding = decode_from_cover(coded, cover);
  for (const auto& [x, m] : decoding) {
    const auto s = oracle.stage_of(x);
    if (s && *s > config.stage_bound) continue;  // enumerated after the cut-off
    if (m == Membership::in) report.decoded.push_back(x);
    if (s) report.expected.push_back(x);
  }
  const bool agree = report.decoded == report.expected;
  report.checks.push_back({"decode", agree,
                           agree ? "" : "decoded {" + join(report.decoded) + "} expected {" +
                                            join(report.expected) + "}"});
  return report;
}

}  // namespace vspace
