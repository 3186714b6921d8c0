#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "vspace/coding.hpp"
#include "vspace/connectivity.hpp"
#include "vspace/error.hpp"
#include "vspace/format.hpp"
#include "vspace/oracles.hpp"
#include "vspace/space.hpp"
#include "vspace/tolerance.hpp"

namespace vspace::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error("cannot write " + path);
}

std::string join(const std::vector<Point>& points) {
  std::string out;
  for (Point p : points) out += " " + std::to_string(p);
  return out;
}

struct Endpoints {
  std::optional<Point> a;
  std::optional<Point> b;

  std::pair<Point, Point> resolve(const SpaceDocument& doc) const {
    const auto pa = a ? a : doc.a;
    const auto pb = b ? b : doc.b;
    if (!pa || !pb) throw ValidationError("endpoints needed: pass --a/--b or add 'a'/'b' lines");
    return {*pa, *pb};
  }
};

struct Search {
  std::string engine = "brute";
  std::uint64_t max_covers = kDefaultMaxCovers;

  SearchOptions options() const {
    return {engine == "pruned" ? Engine::pruned : Engine::brute, max_covers, true};
  }
};

void add_endpoints(CLI::App* cmd, Endpoints& e) {
  cmd->add_option("--a", e.a, "First endpoint (defaults to the file's 'a' line)");
  cmd->add_option("--b", e.b, "Second endpoint (defaults to the file's 'b' line)");
}

void add_search(CLI::App* cmd, Search& s) {
  cmd->add_option("--engine", s.engine, "Connectivity engine")->check(CLI::IsMember({"brute", "pruned"}));
  cmd->add_option("--max-covers", s.max_covers, "Search budget (covers for brute, nodes for pruned)");
}

void print_witness(std::ostream& out, const Cover& cover) {
  for (std::size_t p = 0; p < cover.choices.size(); ++p) {
    out << "choose " << p << ' ' << cover.choices[p] << '\n';
  }
}

void print_report(std::ostream& out, const ToleranceReport& report) {
  out << (report.tolerant() ? "tolerant" : "intolerant") << '\n';
  for (Point p : report.violations) out << "violation " << p << '\n';
  for (const auto& [p, index] : report.tolerant_indices) out << "tolerant " << p << ' ' << index << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite V-spaces: connectedness, tolerance, and the halting-set coding"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string space_path;
  std::string out_path;
  std::string witness_out;
  Endpoints ends;
  Search search;

  auto* validate = app.add_subcommand("validate", "Report invariant violations of a space");
  validate->add_option("SPACE", space_path)->required();
  validate->callback([&] {
    action = [&] {
      const auto doc = parse_space(read_file(space_path));
      const auto violations = validate_space(doc.space);
      if (violations.empty()) {
        out << "valid\n";
        return kOk;
      }
      out << "invalid\n";
      for (const auto& v : violations) out << "violation " << describe(v) << '\n';
      return kRefuted;
    };
  });

  auto* connected = app.add_subcommand("connected", "Decide whether two points are connected");
  connected->add_option("SPACE", space_path)->required();
  add_endpoints(connected, ends);
  add_search(connected, search);
  connected->add_option("--witness-out", witness_out, "Write the witness cover here");
  connected->callback([&] {
    action = [&] {
      const auto doc = parse_space(read_file(space_path));
      const auto [a, b] = ends.resolve(doc);
      const auto verdict = is_connected(doc.space, a, b, search.options());
      if (verdict.connected()) {
        out << "connected\n";
        return kOk;
      }
      out << "notconnected\n";
      print_witness(out, *verdict.witness);
      if (!witness_out.empty()) write_file(witness_out, serialize_cover(*verdict.witness));
      return kRefuted;
    };
  });

  auto* tolerance = app.add_subcommand("tolerance", "Per-point tolerance of the space's labeling");
  tolerance->add_option("SPACE", space_path)->required();
  tolerance->callback([&] {
    action = [&] {
      const auto doc = parse_space(read_file(space_path));
      const auto report = tolerance_report(doc.space, doc.labels);
      print_report(out, report);
      return report.tolerant() ? kOk : kRefuted;
    };
  });

  auto* tcover = app.add_subcommand("tolerant-cover", "Cover of least constant vicinities");
  tcover->add_option("SPACE", space_path)->required();
  tcover->add_option("--out", out_path)->required();
  tcover->callback([&] {
    action = [&] {
      const auto doc = parse_space(read_file(space_path));
      const auto report = tolerance_report(doc.space, doc.labels);
      if (!report.tolerant()) {
        print_report(out, report);
        return kRefuted;
      }
      const auto cover = tolerant_cover(doc.space, doc.labels);
      write_file(out_path, serialize_cover(cover));
      out << "cover\n";
      print_witness(out, cover);
      return kOk;
    };
  });

  auto* induced = app.add_subcommand("induced", "Write the V-space induced by the labeling");
  induced->add_option("SPACE", space_path)->required();
  induced->add_option("--out", out_path)->required();
  induced->callback([&] {
    action = [&] {
      auto doc = parse_space(read_file(space_path));
      doc.space = induced_space(doc.space.point_count, doc.labels);
      write_file(out_path, serialize_space(doc));
      out << "induced\npoints " << doc.space.point_count << '\n';
      return kOk;
    };
  });

  auto* nontol = app.add_subcommand("verify-nontol", "Connected + different labels => some intolerant point");
  nontol->add_option("SPACE", space_path)->required();
  add_endpoints(nontol, ends);
  add_search(nontol, search);
  nontol->callback([&] {
    action = [&] {
      const auto doc = parse_space(read_file(space_path));
      const auto [a, b] = ends.resolve(doc);
      const auto outcome = check_nontol(doc.space, doc.labels, a, b, search.options());
      out << to_string(outcome.status) << '\n';
      if (!outcome.reason.empty()) out << "reason " << outcome.reason << '\n';
      for (Point p : outcome.evidence) out << "violation " << p << '\n';
      return outcome.status == TheoremStatus::refuted ? kRefuted : kOk;
    };
  });

  auto* nonconn = app.add_subcommand("verify-nonconn", "Different labels => not connected in the induced space");
  nonconn->add_option("SPACE", space_path)->required();
  add_endpoints(nonconn, ends);
  nonconn->callback([&] {
    action = [&] {
      const auto doc = parse_space(read_file(space_path));
      const auto [a, b] = ends.resolve(doc);
      const auto outcome = check_nonconn(doc.space.point_count, doc.labels, a, b);
      out << to_string(outcome.status) << '\n';
      if (!outcome.reason.empty()) out << "reason " << outcome.reason << '\n';
      return outcome.status == TheoremStatus::refuted ? kRefuted : kOk;
    };
  });

  std::string oracle_path;
  std::string cover_path;
  std::string pi_path;
  std::string programs_path;
  std::uint64_t point_bound = 0;
  std::optional<std::uint64_t> stage_bound;

  auto config = [&] {
    if (!ends.a || !ends.b || !stage_bound) throw ValidationError("--a, --b and --stages are required");
    return CodedSpaceConfig{*ends.a, *ends.b, point_bound, *stage_bound};
  };

  auto* build = app.add_subcommand("code-build", "Build the coded space and labeling from an oracle");
  build->add_option("--oracle", oracle_path)->required();
  add_endpoints(build, ends);
  build->add_option("--points", point_bound, "Largest point M")->required();
  build->add_option("--stages", stage_bound, "Largest stage T")->required();
  build->add_option("--out-space", out_path)->required();
  build->add_option("--out-pi", pi_path)->required();
  build->callback([&] {
    action = [&] {
      const auto oracle = parse_oracle(read_file(oracle_path));
      const auto coded = build_coded_space(oracle, config());
      write_file(out_path, serialize_space({coded.space, coded.pi, coded.config.a, coded.config.b}));
      write_file(pi_path, serialize_labeling(coded.pi));
      std::size_t vicinities = 0;
      for (const auto& s : coded.space.systems) vicinities += s.size();
      out << "built\npoints " << coded.space.point_count << "\nvicinities " << vicinities << '\n';
      return kOk;
    };
  });

  auto* decode = app.add_subcommand("code-decode", "Decode the enumerated set from a witness cover");
  decode->add_option("--space", space_path)->required();
  decode->add_option("--cover", cover_path)->required();
  decode->add_option("--oracle", oracle_path, "Compare against this oracle");
  decode->add_option("--stages", stage_bound, "Ignore oracle entries after this stage");
  decode->callback([&] {
    action = [&] {
      const auto doc = parse_space(read_file(space_path));
      if (!doc.a || !doc.b) throw ValidationError("coded space file needs 'a' and 'b' lines");
      const auto cover = parse_cover(read_file(cover_path), doc.space.point_count);
      const auto decoding = decode_from_cover(doc.space, *doc.a, *doc.b, cover);
      if (oracle_path.empty()) {
        out << "decoded\ndecoded:" << join(members(decoding)) << '\n';
        return kOk;
      }
      const auto oracle = parse_oracle(read_file(oracle_path));
      std::vector<Point> decoded;
      std::vector<Point> expected;
      for (const auto& [x, m] : decoding) {
        const auto s = oracle.stage_of(x);
        if (s && stage_bound && *s > *stage_bound) continue;
        if (m == Membership::in) decoded.push_back(x);
        if (s) expected.push_back(x);
      }
      const bool agree = decoded == expected;
      out << (agree ? "agree" : "disagree") << "\ndecoded:" << join(decoded) << "\nexpected:" << join(expected)
          << '\n';
      return agree ? kOk : kRefuted;
    };
  });

  auto* roundtrip = app.add_subcommand("code-roundtrip", "Build, take the tolerant witness, decode, compare");
  roundtrip->add_option("--oracle", oracle_path)->required();
  add_endpoints(roundtrip, ends);
  roundtrip->add_option("--points", point_bound, "Largest point M")->required();
  roundtrip->add_option("--stages", stage_bound, "Largest stage T")->required();
  roundtrip->callback([&] {
    action = [&] {
      const auto oracle = parse_oracle(read_file(oracle_path));
      const auto report = verify_roundtrip(oracle, config());
      out << (report.passed() ? "pass" : "fail") << '\n';
      for (const auto& check : report.checks) {
        out << "check " << check.name << ' ' << (check.passed ? "pass" : "fail");
        if (!check.detail.empty() && !check.passed) out << ' ' << check.detail;
        out << '\n';
      }
      out << "decoded:" << join(report.decoded) << '\n';
      return report.passed() ? kOk : kRefuted;
    };
  });

  auto* machine = app.add_subcommand("machine-oracle", "Enumerate halting register-machine programs");
  machine->add_option("--programs", programs_path)->required();
  machine->add_option("--stages", stage_bound, "Step budget T")->required();
  machine->add_option("--out", out_path)->required();
  machine->callback([&] {
    action = [&] {
      const auto programs = parse_programs(read_file(programs_path));
      const auto oracle = machine_enumeration(programs, *stage_bound);
      write_file(out_path, serialize_oracle(oracle));
      out << "oracle\n";
      for (const auto& [x, s] : oracle.entries()) out << "enum " << x << ' ' << s << '\n';
      return kOk;
    };
  });

  std::vector<const char*> argv{"vspace"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace vspace::cli
