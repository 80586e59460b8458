#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "frechet/curve.hpp"

using namespace frechet;

TEST_CASE("parse_curve minimal") {
  auto pc = parse_curve(std::string("2\n0 0\n2 0\n"));
  REQUIRE(pc.curve.size() == 2);
  CHECK(pc.curve[0] == Point2{0, 0});
  CHECK(pc.curve[1] == Point2{2, 0});
  CHECK(pc.collapsed_duplicates == 0);
}

TEST_CASE("parse_curve collapses consecutive duplicates") {
  auto pc = parse_curve(std::string("3\n0 0\n0 0\n1 1\n"));
  REQUIRE(pc.curve.size() == 2);
  CHECK(pc.curve[1] == Point2{1, 1});
  CHECK(pc.collapsed_duplicates == 1);
}

TEST_CASE("parse_curve rejects degenerate input") {
  CHECK_THROWS_AS(parse_curve(std::string("1\n0 0\n")), ParseError);
  CHECK_THROWS_AS(parse_curve(std::string("2\n0 0\n0 0\n")), ParseError);
  CHECK_THROWS_AS(parse_curve(std::string("")), ParseError);
}

TEST_CASE("parse_curve reports line numbers on malformed data") {
  try {
    parse_curve(std::string("2\n0 0\nbad line\n"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_curve(std::string("3\n0 0\n1 1\n")), ParseError);
  CHECK_THROWS_AS(parse_curve(std::string("2\n0 0\n1 1\n2 2\n")), ParseError);
}

TEST_CASE("parse_curve ignores comments and blank lines") {
  auto pc = parse_curve(std::string("# header\n2\n\n0 0\n# mid\n1 0\n"));
  CHECK(pc.curve.size() == 2);
}

TEST_CASE("translate examples") {
  Curve c{{{0, 0}, {1, 0}}};
  CHECK(translate(c, Translation2{0, 0}).pts == c.pts);
  auto moved = translate(c, Translation2{-5, -5});
  CHECK(moved[0] == Point2{-5, -5});
  CHECK(moved[1] == Point2{-4, -5});
}

TEST_CASE("translate round-trips exactly for representable offsets") {
  // dyadic coordinates and offsets of similar magnitude: every intermediate
  // sum is exactly representable, so the round trip is bit-exact
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> grid(-8192, 8192);
  for (int it = 0; it < 200; ++it) {
    Curve c;
    for (int k = 0; k < 6; ++k) c.pts.push_back({grid(rng) / 1024.0, grid(rng) / 1024.0});
    Translation2 t{grid(rng) / 1024.0, grid(rng) / 1024.0};
    auto back = translate(translate(c, t), Translation2{-t.tx, -t.ty});
    CHECK(back.pts == c.pts);
  }
}

TEST_CASE("serialize/parse round-trip is exact") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 100; ++it) {
    Curve c = random_curve(rng(), 2 + it % 9, {{-5, -5}, {7, 11}});
    auto pc = parse_curve(serialize_curve(c));
    CHECK(pc.curve.pts == c.pts);
    CHECK(pc.collapsed_duplicates == 0);
  }
}

TEST_CASE("random_curve determinism, count and containment") {
  Box2 box{{0, 0}, {1, 1}};
  Curve a = random_curve(1234, 5, box);
  Curve b = random_curve(1234, 5, box);
  CHECK(a.pts == b.pts);
  CHECK(a.size() == 5);
  for (const Point2& p : a.pts) {
    CHECK(p.x >= 0.0);
    CHECK(p.x <= 1.0);
    CHECK(p.y >= 0.0);
    CHECK(p.y <= 1.0);
  }
  CHECK(random_curve(1235, 5, box).pts != a.pts);
}

TEST_CASE("translate preserves intra-curve distances") {
  Curve c = random_curve(5, 7, {{-1, -1}, {1, 1}});
  auto moved = translate(c, Translation2{3.25, -2.5});
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    CHECK(distance(moved[i], moved[i + 1]) == Catch::Approx(distance(c[i], c[i + 1])));
}
