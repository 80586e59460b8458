#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "frechet/refined_graph.hpp"

using namespace frechet;

namespace {
const Curve kPiA{{{0, 0}, {2, 0}}};
const Curve kSigmaA{{{0, 1}, {2, 1}}};
}  // namespace

TEST_CASE("build_fsg example A at delta 1.2") {
  auto sk = build_skeleton(kPiA, kSigmaA, 1.2);
  auto g = build_fsg(sk);
  CHECK(g.vertical_lines().size() == 4);    // 2 boundaries + 2 column criticals
  CHECK(g.horizontal_lines().size() == 4);  // 2 boundaries + 2 row criticals
  CHECK(g.vertical_lines().size() * g.horizontal_lines().size() == 16);
}

TEST_CASE("build_fsg with empty free space is the corner lattice") {
  Curve a = random_curve(1, 4, {{0, 0}, {1, 1}});
  Curve b = random_curve(2, 3, {{5, 5}, {6, 6}});
  auto sk = build_skeleton(a, b, 0.05);
  auto g = build_fsg(sk);
  CHECK(g.vertical_lines().size() == a.size());
  CHECK(g.horizontal_lines().size() == b.size());
  for (std::size_t vi = 0; vi < g.vertical_lines().size(); ++vi)
    for (std::size_t hi = 0; hi < g.horizontal_lines().size(); ++hi)
      CHECK_FALSE(g.weight(vi, hi));
}

TEST_CASE("build_fsg of identical curves at delta 0") {
  Curve c{{{0, 0}, {1, 0}, {1, 1}}};
  auto sk = build_skeleton(c, c, 0.0);
  auto g = build_fsg(sk);
  CHECK(g.vertical_lines().size() == 3);
  CHECK(g.horizontal_lines().size() == 3);
  for (std::size_t vi = 0; vi < 3; ++vi)
    for (std::size_t hi = 0; hi < 3; ++hi) CHECK(g.weight(vi, hi) == (vi == hi));
}

TEST_CASE("line counts match the skeleton critical counts") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.1, 1.4);
  for (int it = 0; it < 50; ++it) {
    Curve a = random_curve(rng(), 2 + it % 5, {{0, 0}, {2, 2}});
    Curve b = random_curve(rng(), 2 + (it + 1) % 5, {{0, 0}, {2, 2}});
    auto sk = build_skeleton(a, b, u(rng));
    auto g = build_fsg(sk);
    std::size_t mc = 0, mr = 0;
    for (int i = 0; i + 1 < sk.n_pi(); ++i) mc += sk.m_col(i);
    for (int j = 0; j + 1 < sk.n_sigma(); ++j) mr += sk.m_row(j);
    CHECK(g.vertical_lines().size() == a.size() + mc);
    CHECK(g.horizontal_lines().size() == b.size() + mr);
  }
}

TEST_CASE("fsg_reachable example A") {
  CHECK(fsg_reachable(build_fsg(build_skeleton(kPiA, kSigmaA, 1.0))));
  CHECK_FALSE(fsg_reachable(build_fsg(build_skeleton(kPiA, kSigmaA, 0.9))));
}

TEST_CASE("fsg_reachable is true when everything is free") {
  Curve a = random_curve(3, 5, {{0, 0}, {1, 1}});
  Curve b = random_curve(4, 4, {{0, 0}, {1, 1}});
  auto g = build_fsg(build_skeleton(a, b, 100.0));
  for (std::size_t vi = 0; vi < g.vertical_lines().size(); ++vi)
    for (std::size_t hi = 0; hi < g.horizontal_lines().size(); ++hi) CHECK(g.weight(vi, hi));
  CHECK(fsg_reachable(g));
}

TEST_CASE("fsg_reachable equals alt_godau_decide on random instances") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> factor(0.6, 1.5);
  int agree = 0, total = 0;
  for (int it = 0; it < 220; ++it) {
    Curve a = random_curve(rng(), 2 + it % 5, {{0, 0}, {2, 2}});
    Curve b = random_curve(rng(), 2 + (it + 2) % 5, {{0, 0}, {2, 2}});
    const double d = frechet_value(a, b, 1e-6) * factor(rng);
    auto sk = build_skeleton(a, b, d);
    ++total;
    if (fsg_reachable(build_fsg(sk)) == alt_godau_decide(sk)) ++agree;
  }
  CHECK(agree == total);
}

TEST_CASE("interior vertices have weight one") {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 30; ++it) {
    Curve a = random_curve(rng(), 4, {{0, 0}, {2, 2}});
    Curve b = random_curve(rng(), 4, {{0, 0}, {2, 2}});
    auto g = build_fsg(build_skeleton(a, b, 0.8));
    for (std::size_t vi = 0; vi < g.vertical_lines().size(); ++vi)
      for (std::size_t hi = 0; hi < g.horizontal_lines().size(); ++hi)
        if (g.vertex_class(vi, hi) == VertexClass::Interior) CHECK(g.weight(vi, hi));
  }
}

TEST_CASE("activated crossings along a boundary are contiguous within a strip") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.2, 1.2);
  for (int it = 0; it < 40; ++it) {
    Curve a = random_curve(rng(), 2 + it % 4, {{0, 0}, {2, 2}});
    Curve b = random_curve(rng(), 2 + (it + 1) % 4, {{0, 0}, {2, 2}});
    auto g = build_fsg(build_skeleton(a, b, u(rng)));
    const auto& vls = g.vertical_lines();
    const auto& hls = g.horizontal_lines();
    for (std::size_t vi = 0; vi < vls.size(); ++vi) {
      if (vls[vi].kind != LineKind::Boundary) continue;
      for (int strip = 0; strip + 1 < int(b.size()); ++strip) {
        int flips = 0;
        bool prev = false, first = true;
        for (std::size_t hi = 0; hi < hls.size(); ++hi) {
          if (hls[hi].kind != LineKind::Critical || hls[hi].strip != strip) continue;
          const bool w = g.weight(vi, hi);
          if (!first && w != prev) ++flips;
          prev = w;
          first = false;
        }
        CHECK(flips <= 2);
      }
    }
  }
}

TEST_CASE("dump exposes orderings and the weight matrix") {
  auto g = build_fsg(build_skeleton(kPiA, kSigmaA, 1.2));
  auto j = g.dump();
  CHECK(j["vertical_lines"].size() == 4);
  CHECK(j["weights"].size() == 4);
  CHECK(j["weights"][0].get<std::string>().size() == 4);
}
