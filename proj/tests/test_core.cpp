#include <doctest.h>

#include <random>

#include "core.hpp"
#include "support.hpp"

using namespace tightpath;

TEST_CASE("cyclic ground walks clockwise and wraps") {
  const CyclicGround g(6);
  CHECK(g.next(5) == 0);
  CHECK(g.prev(0) == 5);
  CHECK(g.segment(4, 1) == std::vector<Vertex>{4, 5, 0, 1});
  CHECK(g.segment(2, 2) == std::vector<Vertex>{2});
  CHECK(g.steps(4, 1) == 3);
  CHECK_THROWS_AS(CyclicGround(0), Error);
  CHECK_THROWS_AS(g.check(6), Error);
}

TEST_CASE("arc length is the shorter side count") {
  const CyclicGround g(7);
  for (Vertex u = 0; u < 7; ++u) {
    for (Vertex v = 0; v < 7; ++v) {
      const int cw = static_cast<int>(g.segment(u, v).size()) - 1;
      const int ccw = static_cast<int>(g.segment(v, u).size()) - 1;
      CHECK(g.arc_length(u, v) == std::min(cw, ccw));
      CHECK(g.arc_length(u, v) == g.arc_length(v, u));
      CHECK(g.arc_length(u, v) <= 3);
    }
  }
  CHECK(CyclicGround(8).arc_length(1, 6) == 3);
}

TEST_CASE("edges compare lexicographically on sorted vertices") {
  CHECK(Edge{0, 3} < Edge{1, 2});
  CHECK(Edge{0, 1, 5} < Edge{0, 2, 3});
  CHECK_FALSE(Edge{1, 2} < Edge{1, 2});
  CHECK(Edge{2, 0}.vertices() == std::vector<Vertex>{0, 2});
  CHECK_THROWS_AS((Edge{1, 1}), Error);
}

TEST_CASE("hypergraph validates and deduplicates") {
  const Hypergraph h(5, 2, true, {Edge{3, 1}, Edge{0, 2}, Edge{1, 3}});
  CHECK(h.size() == 2);
  CHECK(h.edges().front() == Edge{0, 2});
  CHECK(h.contains(Edge{1, 3}));
  CHECK_FALSE(h.contains(Edge{0, 1}));
  CHECK_THROWS_AS(Hypergraph(5, 2, true, {Edge{0, 1, 2}}), Error);
  CHECK_THROWS_AS(Hypergraph(5, 2, true, {Edge{0, 5}}), Error);
  CHECK_THROWS_AS(Hypergraph(3, 4, true), Error);
}

TEST_CASE("shadow and link match a set-based oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + trial % 5;
    const int r = 2 + trial % 3;
    const auto h = oracle::random_hypergraph(n, r, true, 0.4, rng);
    const auto sh = shadow(h);
    const auto expected = oracle::shadow_sets(h);
    REQUIRE(sh.size() == expected.size());
    for (const Edge& e : sh.edges()) CHECK(expected.contains(e.vertices()));

    const Vertex v = trial % n;
    const auto lk = link(h, v);
    CHECK(lk.size() == h.degree(v));
    for (const Edge& e : lk.edges()) CHECK(h.contains(e.mask() | vertex_bit(v)));
  }
  CHECK_THROWS_AS(shadow(Hypergraph(3, 1, false)), Error);
}

TEST_CASE("k_subsets enumerates colex order with binomial count") {
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto subs = k_subsets(n, k);
      CHECK(static_cast<long long>(subs.size()) == binomial(n, k));
      CHECK(std::is_sorted(subs.begin(), subs.end()));
      for (auto m : subs) CHECK(std::popcount(m) == k);
    }
  }
  CHECK(k_subsets(4, 5).empty());
  CHECK(binomial(64, 32) == 1832624140942590534LL);
}

TEST_CASE("edge union keeps geometry of the left operand") {
  const Hypergraph a(4, 2, true, {Edge{0, 1}});
  const Hypergraph b(4, 2, true, {Edge{0, 1}, Edge{2, 3}});
  CHECK(edge_union(a, b).size() == 2);
  CHECK_THROWS_AS(edge_union(a, Hypergraph(5, 2, true)), Error);
}
