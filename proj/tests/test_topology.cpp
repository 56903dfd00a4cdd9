#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "smallworld/layout.hpp"
#include "smallworld/rng.hpp"
#include "smallworld/topology.hpp"

using namespace smallworld;

TEST_CASE("derive_seed separates streams") {
  CHECK_EQ(derive_seed(42, 1), derive_seed(42, 1));
  CHECK_NE(derive_seed(42, 1), derive_seed(42, 2));
  CHECK_NE(derive_seed(42, 1), derive_seed(43, 1));
  CHECK_NE(mix64(0), 0);
}

TEST_CASE("rng reproduces its stream") {
  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK_EQ(a.uniform01(), b.uniform01());
  Rng c(8);
  CHECK_NE(Rng(7).uniform01(), c.uniform01());
}

TEST_CASE("rng uniform01 stays in [0,1)") {
  Rng rng(123);
  for (int i = 0; i < 10000; ++i) {
    double u = rng.uniform01();
    CHECK_GE(u, 0.0);
    CHECK_LT(u, 1.0);
  }
}

TEST_CASE("rng uniform respects bounds") {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    double u = rng.uniform(-2.0, 3.0);
    CHECK_GE(u, -2.0);
    CHECK_LT(u, 3.0);
  }
}

TEST_CASE("rng below covers the range without bias artifacts") {
  Rng rng(9);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t x = rng.below(6);
    CHECK_LT(x, 6);
    seen.insert(x);
  }
  CHECK_EQ(seen.size(), 6);
  CHECK_EQ(rng.below(1), 0);
  CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
}

TEST_CASE("sample_without_replacement draws distinct ids") {
  Rng rng(11);
  auto s = rng.sample_without_replacement(10, 4);
  CHECK_EQ(s.size(), 4);
  std::set<int> distinct(s.begin(), s.end());
  CHECK_EQ(distinct.size(), 4);
  for (int v : s) {
    CHECK_GE(v, 0);
    CHECK_LT(v, 10);
  }
}

TEST_CASE("sample_without_replacement with k = n is a permutation") {
  Rng rng(13);
  auto s = rng.sample_without_replacement(8, 8);
  std::set<int> distinct(s.begin(), s.end());
  CHECK_EQ(distinct.size(), 8);
  CHECK_EQ(*distinct.begin(), 0);
  CHECK_EQ(*distinct.rbegin(), 7);
  CHECK(rng.sample_without_replacement(5, 0).empty());
  CHECK_THROWS_AS(rng.sample_without_replacement(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(rng.sample_without_replacement(-1, 0), std::invalid_argument);
}

TEST_CASE("distance and bearing fixtures") {
  CHECK_EQ(distance({0, 0}, {3, 4}), 5.0);
  CHECK_EQ(bearing({0, 0}, {1, 0}), 0.0);
  CHECK_EQ(bearing({0, 0}, {0, 1}), doctest::Approx(pi / 2).epsilon(1e-12));
  CHECK_EQ(bearing({0, 0}, {-1, 0}), doctest::Approx(pi).epsilon(1e-12));
  CHECK_EQ(bearing({0, 0}, {0, -1}), doctest::Approx(3 * pi / 2).epsilon(1e-12));
  CHECK_EQ(bearing({2, 2}, {3, 1}), doctest::Approx(7 * pi / 4).epsilon(1e-12));
  CHECK_THROWS_AS(bearing({1, 1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("bearing is always normalized") {
  Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    Point a{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    Point b{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    if (a.x == b.x && a.y == b.y) continue;
    double ang = bearing(a, b);
    CHECK_GE(ang, 0.0);
    CHECK_LT(ang, two_pi);
  }
}

TEST_CASE("place_nodes fills the region deterministically") {
  NodeLayout a = place_nodes(50, 8.0, 6.0, 1.5, 99);
  CHECK_EQ(a.node_count(), 50);
  CHECK_EQ(a.region_width, 8.0);
  CHECK_EQ(a.region_height, 6.0);
  CHECK_EQ(a.omni_range, 1.5);
  CHECK_EQ(a.seed, 99);
  for (const Point& p : a.positions) {
    CHECK_GE(p.x, 0.0);
    CHECK_LE(p.x, 8.0);
    CHECK_GE(p.y, 0.0);
    CHECK_LE(p.y, 6.0);
  }
  NodeLayout b = place_nodes(50, 8.0, 6.0, 1.5, 99);
  for (int i = 0; i < 50; ++i) {
    CHECK_EQ(a.positions[i].x, b.positions[i].x);
    CHECK_EQ(a.positions[i].y, b.positions[i].y);
  }
  NodeLayout c = place_nodes(50, 8.0, 6.0, 1.5, 100);
  CHECK_NE(a.positions[0].x, c.positions[0].x);
}

TEST_CASE("place_nodes rejects bad parameters") {
  CHECK_THROWS_AS(place_nodes(0, 1, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(place_nodes(5, 0, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(place_nodes(5, 1, -2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(place_nodes(5, 1, 1, 0, 0), std::invalid_argument);
}

TEST_CASE("euclidean_diameter finds the farthest pair") {
  NodeLayout layout;
  layout.region_width = layout.region_height = 10;
  layout.positions = {{0, 0}, {1, 1}, {3, 4}, {0.5, 0.5}};
  CHECK_EQ(euclidean_diameter(layout), 5.0);
  layout.positions = {{2, 2}};
  CHECK_THROWS_AS(euclidean_diameter(layout), std::invalid_argument);
}

TEST_CASE("layout text round trip") {
  NodeLayout layout = place_nodes(20, 4.0, 3.0, 1.0, 424242);
  std::ostringstream first;
  write_layout(first, layout);

  std::istringstream in(first.str());
  NodeLayout parsed = read_layout(in);
  CHECK_EQ(parsed.node_count(), 20);
  CHECK_EQ(parsed.region_width, 4.0);
  CHECK_EQ(parsed.region_height, 3.0);
  CHECK_EQ(parsed.omni_range, 1.0);
  CHECK_EQ(parsed.seed, 424242);
  for (int i = 0; i < 20; ++i) {
    CHECK_EQ(parsed.positions[i].x,
             doctest::Approx(layout.positions[i].x).epsilon(5e-7));
    CHECK_EQ(parsed.positions[i].y,
             doctest::Approx(layout.positions[i].y).epsilon(5e-7));
  }

  // six-decimal quantization is a fixed point of write/read
  std::ostringstream second;
  write_layout(second, parsed);
  CHECK_EQ(first.str(), second.str());
}

TEST_CASE("read_layout rejects malformed files") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_layout(in);
  };
  CHECK_THROWS_AS(parse(""), std::invalid_argument);
  CHECK_THROWS_AS(parse("not a header\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("2 1.0 1.0 1.0 0\n0 0.5 0.5\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("2 1.0 1.0 1.0 0\n0 0.5 0.5\n2 0.5 0.5\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse("1 1.0 1.0 1.0 0\n0 1.5 0.5\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("0 1.0 1.0 1.0 0\n"), std::invalid_argument);
}

TEST_CASE("omni graph links nodes within range, both ways") {
  NodeLayout layout;
  layout.region_width = layout.region_height = 5;
  layout.omni_range = 1.0;
  layout.positions = {{0, 0}, {0.8, 0}, {1.6, 0}};
  Topology topo = build_omni_graph(layout);
  CHECK_EQ(topo.node_count, 3);
  CHECK(topo.has_edge(0, 1));
  CHECK(topo.has_edge(1, 0));
  CHECK(topo.has_edge(1, 2));
  CHECK(topo.has_edge(2, 1));
  CHECK_FALSE(topo.has_edge(0, 2));
  CHECK_FALSE(topo.has_edge(2, 0));
  CHECK_FALSE(topo.has_edge(0, 0));
  CHECK_FALSE(topo.has_edge(0, 3));
  CHECK(is_symmetric(topo));
}

TEST_CASE("omni graph includes the exact range boundary") {
  NodeLayout layout;
  layout.region_width = layout.region_height = 5;
  layout.omni_range = 1.0;
  layout.positions = {{0, 0}, {1.0, 0}};
  Topology topo = build_omni_graph(layout);
  CHECK(topo.has_edge(0, 1));
  layout.positions[1].x = 1.0000001;
  topo = build_omni_graph(layout);
  CHECK_FALSE(topo.has_edge(0, 1));
}

TEST_CASE("omni graphs are symmetric with sorted neighbor lists") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    NodeLayout layout = place_nodes(40, 5.0, 5.0, 1.0, seed);
    Topology topo = build_omni_graph(layout);
    CHECK(is_symmetric(topo));
    for (const auto& out : topo.out_edges)
      for (std::size_t i = 1; i < out.size(); ++i) CHECK_LT(out[i - 1], out[i]);
  }
}

TEST_CASE("strong connectivity on hand graphs") {
  Topology cycle{3, {{1}, {2}, {0}}};
  CHECK(strongly_connected(cycle));

  Topology chain{3, {{1}, {2}, {}}};
  CHECK_FALSE(strongly_connected(chain));

  Topology sym_chain{3, {{1}, {0, 2}, {1}}};
  CHECK(strongly_connected(sym_chain));

  Topology split{4, {{1}, {0}, {3}, {2}}};
  CHECK_FALSE(strongly_connected(split));

  Topology lone{1, {{}}};
  CHECK(strongly_connected(lone));

  Topology empty;
  CHECK_THROWS_AS(strongly_connected(empty), std::invalid_argument);
}

TEST_CASE("reverse_adjacency flips every edge") {
  Topology topo{3, {{1, 2}, {2}, {}}};
  auto rev = reverse_adjacency(topo);
  CHECK_EQ(rev[0], std::vector<int>{});
  CHECK_EQ(rev[1], std::vector<int>{0});
  CHECK_EQ(rev[2], std::vector<int>({0, 1}));
}
