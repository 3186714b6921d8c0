#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"
#include "vspace/error.hpp"
#include "vspace/format.hpp"

using namespace vspace;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(VSPACE_FIXTURE_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("canonical fixtures re-serialize byte-identically") {
  for (const char* name : {"s1.vs", "s2.vs", "weak.vs", "equal_labels.vs", "owner_missing.vs"}) {
    CAPTURE(name);
    const auto text = fixture(name);
    CHECK(serialize_space(parse_space(text)) == text);
  }
  for (const char* name : {"k1.oracle", "k2.oracle", "empty.oracle"}) {
    CAPTURE(name);
    const auto text = fixture(name);
    CHECK(serialize_oracle(parse_oracle(text)) == text);
  }
  const auto cover = fixture("s1.cover");
  CHECK(serialize_cover(parse_cover(cover, 3)) == cover);
  const auto programs = fixture("machines.programs");
  CHECK(serialize_programs(parse_programs(programs)) == programs);
}

TEST_CASE("comments and ordering normalize to the canonical form") {
  const auto doc = parse_space(fixture("annotated.vs"));
  CHECK(serialize_space(doc) == fixture("s1.vs"));
  CHECK(doc.space.systems[1].vicinities[1] == Vicinity({1, 2}));
  CHECK(doc.a == 0u);
  CHECK(doc.b == 2u);
  CHECK(doc.labels.at(2) == "B");
}

TEST_CASE("parsed S1 matches the in-memory S1") {
  const auto doc = parse_space(fixture("s1.vs"));
  const auto expected = testing::s1();
  CHECK(doc.space.mode == expected.mode);
  CHECK(doc.space.point_count == 3);
  for (std::size_t p = 0; p < 3; ++p) CHECK(doc.space.systems[p].vicinities == expected.systems[p].vicinities);
}

TEST_CASE("space parse errors") {
  auto fails = [](const std::string& text) { CHECK_THROWS_AS(parse_space(text), ParseError); };
  fails("");
  fails("vspace v2\nmode strong\npoints 1\n");
  fails("vspace v1\npoints 1\n");
  fails("vspace v1\nmode medium\npoints 1\n");
  fails("vspace v1\nmode strong\n");
  fails("vspace v1\nmode strong\npoints -1\n");
  fails("vspace v1\nmode strong\npoints 2\nvic 0:  0\n");
  fails("vspace v1\nmode strong\npoints 2\nvic 0 0\n");
  fails("vspace v1\nmode strong\npoints 2\nvic x: 0\n");
  fails("vspace v1\nmode strong\npoints 2\nlabel 0 A-B\n");
  fails("vspace v1\nmode strong\npoints 2\nlabel 0 A\nlabel 0 B\n");
  fails("vspace v1\nmode strong\npoints 2\nlabel 5 A\n");
  fails("vspace v1\nmode strong\npoints 2\na 0\na 1\n");
  fails("vspace v1\nmode strong\npoints 2\nb 2\n");
  fails("vspace v1\nmode strong\npoints 2\nedge 0 1\n");
  try {
    parse_space("vspace v1\nmode strong\n\npoints 2\nbogus\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 5:", 0) == 0);
  }
}

TEST_CASE("vicinities of points past N survive parsing for validation") {
  const auto doc = parse_space("vspace v1\nmode strong\npoints 1\nvic 0: 0\nvic 2: 2\n");
  CHECK(doc.space.systems.size() == 3);
  CHECK_FALSE(validate_space(doc.space).empty());
}

TEST_CASE("cover parse errors") {
  CHECK_THROWS_AS(parse_cover("cover v1\nchoose 0 0\nchoose 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_cover("cover v1\nchoose 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_cover("cover v1\nchoose 0 0\n", 2), ParseError);
  CHECK_THROWS_AS(parse_cover("cover v1\npick 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_cover(fixture("missing_point.cover")), ParseError);
  CHECK(parse_cover("cover v1\n").choices.empty());
}

TEST_CASE("oracle parse errors") {
  CHECK_THROWS_AS(parse_oracle(fixture("descending.oracle")), ParseError);
  CHECK_THROWS_AS(parse_oracle(fixture("late_stage.oracle")), ParseError);
  CHECK_THROWS_AS(parse_oracle("oracle v1\nstages 3\nenum 1 1\nenum 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_oracle("oracle v1\nenum 1 1\n"), ParseError);
}

TEST_CASE("labeling and programs formats") {
  const Labeling pi({"0", "1", "1"});
  const auto text = serialize_labeling(pi);
  CHECK(text == "labeling v1\nlabel 0 0\nlabel 1 1\nlabel 2 1\n");
  CHECK(parse_labeling(text).entries() == pi.entries());
  CHECK_THROWS_AS(parse_labeling("labeling v1\nlabel 0 a b\n"), ParseError);
  CHECK_THROWS_AS(parse_programs(fixture("bad.programs")), ParseError);
  CHECK_THROWS_AS(parse_programs("programs v1\nprog 1: HALT\n"), ParseError);
  CHECK(parse_programs(fixture("machines.programs")).size() == 5);
}

TEST_CASE("property: random spaces round trip") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 300; ++round) {
    SpaceDocument doc{testing::random_space(rng, 7, 4), {}, std::nullopt, std::nullopt};
    doc.labels = testing::random_labeling(rng, doc.space.point_count, 3);
    if (rng() % 2) doc.a = 0;
    if (rng() % 2) doc.b = static_cast<Point>(doc.space.point_count - 1);
    const auto text = serialize_space(doc);
    const auto back = parse_space(text);
    CHECK(serialize_space(back) == text);
    CHECK(back.space.mode == doc.space.mode);
    for (std::size_t p = 0; p < doc.space.point_count; ++p) {
      CHECK(back.space.systems[p].vicinities == doc.space.systems[p].vicinities);
    }
    Cover cover;
    for (const auto& s : doc.space.systems) cover.choices.push_back(rng() % s.size());
    CHECK(parse_cover(serialize_cover(cover), cover.choices.size()).choices == cover.choices);
  }
}
