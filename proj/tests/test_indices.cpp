#include "doctest.h"

#include "oracle.hpp"
#include "pww/corpus.hpp"
#include "pww/error.hpp"
#include "pww/generators.hpp"
#include "pww/indices.hpp"

using namespace pww;

namespace {

DistanceMatrix dm_of(const Graph &g) { return distance_matrix(g); }

Graph spider_tree() { return build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}); }

} // namespace

TEST_CASE("Wiener and hyper-Wiener") {
  CHECK(wiener(dm_of(path(3))) == 4);
  CHECK(wiener(dm_of(star(4))) == 16);
  CHECK(wiener(dm_of(path(4))) == 10);
  for (int n = 2; n <= 8; ++n)
    CHECK(hyper_wiener(dm_of(complete(n))) == choose2(n));
  CHECK(hyper_wiener(dm_of(path(4))) == 15);
  for (Graph g : {cycle(4), cycle(5), complete_bipartite(2, 3), complete_bipartite(3, 3), star(5)}) {
    REQUIRE(dm_of(g).diameter() == 2);
    CHECK(hyper_wiener(dm_of(g)) == 3 * choose2(g.n()) - 2 * g.m());
  }
  CHECK_THROWS_AS(wiener(dm_of(build_graph(1, {}))), Error);
}

TEST_CASE("peripheral distance number") {
  auto c4 = dm_of(cycle(4));
  for (Vertex v = 0; v < 4; ++v)
    CHECK(peripheral_distance_number(c4, v) == 4);
  auto k5 = dm_of(complete(5));
  CHECK(peripheral_distance_number(k5, 3) == 4);
  CHECK(peripheral_distance_number(dm_of(path(5)), 2) == 4);
}

TEST_CASE("peripheral Wiener") {
  CHECK(peripheral_wiener(dm_of(cycle(4))) == 8);
  for (int n = 2; n <= 9; ++n) {
    CHECK(peripheral_wiener(dm_of(path(n))) == n - 1);
    CHECK(peripheral_wiener(dm_of(complete(n))) == choose2(n));
  }
}

TEST_CASE("peripheral hyper-Wiener golden values") {
  CHECK(peripheral_hyper_wiener(dm_of(path(3))) == 3);
  CHECK(peripheral_hyper_wiener(dm_of(star(4))) == 18);
  CHECK(peripheral_hyper_wiener(dm_of(spider_tree())) == 15);
  CHECK(peripheral_hyper_wiener(dm_of(complete(4))) == 6);
  CHECK(peripheral_hyper_wiener(dm_of(hypercube(2))) == 10);
  // 3 C(3,2) + 3 C(2,2) + 2*3
  CHECK(peripheral_hyper_wiener(dm_of(complete_bipartite(2, 3))) == 18);
  CHECK(oracle::profile(complete_bipartite(2, 3)).pww == 18);
}

TEST_CASE("terminal indices") {
  for (int n = 2; n <= 8; ++n) {
    Graph p = path(n);
    auto dm = dm_of(p);
    CHECK(terminal_wiener(dm, p) == n - 1);
    CHECK(terminal_hyper_wiener(dm, p) == ((n - 1) + (n - 1) * (n - 1)) / 2);
  }
  Graph t = spider_tree();
  CHECK(terminal_wiener(dm_of(t), t) == 8);
  CHECK(terminal_hyper_wiener(dm_of(t), t) == 15);
  for (int n = 3; n <= 7; ++n) {
    Graph c = cycle(n);
    CHECK(terminal_wiener(dm_of(c), c) == 0);
    CHECK(terminal_hyper_wiener(dm_of(c), c) == 0);
  }
  // one pendant vertex: empty pair sum
  Graph lollipop = build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  CHECK(terminal_wiener(dm_of(lollipop), lollipop) == 0);
}

TEST_CASE("index_vector") {
  auto p2 = index_vector(path(2));
  CHECK(p2 == IndexVector{1, 1, 1, 1, 1, 1, 2, 2});
  auto k4 = index_vector(complete(4));
  CHECK(k4 == IndexVector{6, 6, 6, 6, 0, 0, 4, 0});
  // 2 C(5,2) + C(5,2) - 2*5
  CHECK(index_vector(cycle(5)).pww == 20);
  CHECK_THROWS_AS(index_vector(build_graph(3, {{0, 1}})), Error);
  try {
    index_vector(build_graph(1, {}));
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::TrivialGraph);
  }
}

TEST_CASE("indices match the Floyd-Warshall oracle on every connected graph n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for_each_connected_mask(n, [&](EdgeMask m) {
      Graph g = mask_to_graph(n, m);
      auto iv = index_vector(g);
      auto ref = oracle::profile(g);
      REQUIRE(iv.w == ref.w);
      REQUIRE(iv.ww == ref.ww);
      REQUIRE(iv.pw == ref.pw);
      REQUIRE(iv.pww == ref.pww);
      REQUIRE(iv.tw == ref.tw);
      REQUIRE(iv.tww == ref.tww);
      REQUIRE(iv.k == static_cast<int>(ref.periphery.size()));
      REQUIRE(iv.pendant_count == static_cast<int>(ref.pendants.size()));
      // ordering relations
      REQUIRE(iv.pw <= iv.w);
      REQUIRE(iv.w <= iv.ww);
      REQUIRE(iv.pw <= iv.pww);
      REQUIRE(iv.pww <= iv.ww);
      REQUIRE(iv.pww >= choose2(iv.k));
    });
}

TEST_CASE("bitmask kernel agrees with the definitional indices") {
  for (int n = 2; n <= 6; ++n)
    for_each_connected_mask(n, [&](EdgeMask m) {
      REQUIRE(mask_index_vector(expand_mask(n, m)) == index_vector(mask_to_graph(n, m)));
    });
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = random_connected_graph(7 + seed % 5, 0.35, seed);
    REQUIRE(mask_index_vector(expand_mask(g.n(), graph_to_mask(g))) == index_vector(g));
  }
}

TEST_CASE("random graphs up to 64 vertices against the oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_connected_graph(10 + seed, 0.2, seed);
    auto iv = index_vector(g);
    auto ref = oracle::profile(g);
    REQUIRE(iv.w == ref.w);
    REQUIRE(iv.ww == ref.ww);
    REQUIRE(iv.pw == ref.pw);
    REQUIRE(iv.pww == ref.pww);
  }
}
