#include <doctest.h>

#include <random>
#include <set>

#include "constructions.hpp"
#include "extension.hpp"
#include "support.hpp"

using namespace tightpath;

namespace {

// Distinct last r-tuples of all k-zigzags, from plain enumeration.
std::set<std::vector<Vertex>> brute_ends(const Hypergraph& h, int k) {
  std::set<std::vector<Vertex>> out;
  const int len = k + h.r() - 1;
  if (len > h.n()) return out;
  oracle::for_each_sequence(h.n(), len, [&](const std::vector<Vertex>& s) {
    if (oracle::windows_are_edges(h, s, 1) && oracle::zigzag_by_segments(h.n(), s, h.r())) {
      out.insert({s.end() - h.r(), s.end()});
    }
    return false;
  });
  return out;
}

Hypergraph complete_graph(int n) {
  std::vector<Edge> all;
  for (auto m : k_subsets(n, 2)) all.emplace_back(m);
  return Hypergraph(n, 2, true, all);
}

}  // namespace

TEST_CASE("interval and extension set examples") {
  const Hypergraph h(4, 2, true, {Edge{0, 2}, Edge{1, 2}});
  auto ix = interval_and_X(h, End{{0, 2}, 1});
  CHECK(ix.interval == std::vector<Vertex>{0, 1, 2});
  CHECK(ix.extension_set == std::vector<Vertex>{1});

  const auto k3 = complete_graph(3);
  ix = interval_and_X(k3, End{{2, 1}, 2});
  CHECK(ix.interval == std::vector<Vertex>{1, 2});
  CHECK(ix.extension_set.empty());

  const Hypergraph single(4, 2, true, {Edge{0, 2}});
  CHECK(interval_and_X(single, End{{0, 2}, 1}).extension_set.empty());
  try {
    extend_f(single, End{{0, 2}, 1});
    FAIL("expected stuck end");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::stuck_end);
  }
}

TEST_CASE("extend_f picks the X element nearest v_{k-1}") {
  const Hypergraph h(4, 2, true, {Edge{0, 2}, Edge{1, 2}});
  const End next = extend_f(h, End{{0, 2}, 1});
  CHECK(next.tuple == std::vector<Vertex>{2, 1});
  CHECK(next.k == 2);
  CHECK(is_zigzag_sequence(h.ground(), {0, 2, 1}, 2));

  const auto k6 = complete_graph(6);
  CHECK(extend_f(k6, End{{0, 3}, 1}).tuple == std::vector<Vertex>{3, 1});
  CHECK(is_zigzag_sequence(k6.ground(), {0, 3, 1}, 2));
}

TEST_CASE("project_g drops the first vertex") {
  CHECK(project_g(End{{0, 2}, 1}) == std::vector<Vertex>{2});
  CHECK(project_g(End{{5, 1, 7, 8}, 3}) == std::vector<Vertex>{1, 7, 8});
}

TEST_CASE("end checks") {
  const auto k4 = complete_graph(4);
  CHECK_THROWS_AS(interval_and_X(k4, End{{0, 0}, 1}), Error);
  CHECK_THROWS_AS(interval_and_X(k4.with_geometry(false), End{{0, 1}, 1}), Error);
  CHECK_THROWS_AS(interval_and_X(Hypergraph(5, 3, true), End{{0, 1, 2}, 1}), Error);
  CHECK_THROWS_AS(interval_and_X(k4, End{{0, 1}, 1, EndMode::good_path}), Error);
}

TEST_CASE("ends of a single edge") {
  const Hypergraph h(4, 2, true, {Edge{0, 2}});
  const auto ends = enumerate_ends(h, 1, EndMode::zigzag);
  REQUIRE(ends.all.size() == 2);
  CHECK(ends.all[0].tuple == std::vector<Vertex>{0, 2});
  CHECK(ends.all[1].tuple == std::vector<Vertex>{2, 0});
  CHECK(ends.stuck.size() == 2);
  const auto empty = enumerate_ends(Hypergraph(4, 2, true), 1, EndMode::zigzag);
  CHECK(empty.all.empty());
  CHECK(empty.stuck.empty());
}

TEST_CASE("enumerated ends match brute force") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 4;
    const int r = trial % 4 == 3 ? 4 : 2;
    const auto h = oracle::random_hypergraph(n, r, true, 0.5, rng);
    for (int k = 1; k <= 3; ++k) {
      const auto ends = enumerate_ends(h, k, EndMode::zigzag);
      std::set<std::vector<Vertex>> got;
      for (const auto& e : ends.all) got.insert(e.tuple);
      CHECK(got == brute_ends(h, k));
    }
  }
}

TEST_CASE("complete convex graph on 4 points at k = 2") {
  const auto k4 = complete_graph(4);
  CHECK(brute_ends(k4, 2).size() == 8);
  const auto report = verify_counting(k4, 2, EndMode::zigzag);
  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[1].s_k == 8);
  CHECK(report.rows[1].lower_bound == 8);
  CHECK(report.violations() == 0);
}

TEST_CASE("g is injective on stuck ends of the 5-cycle") {
  const Hypergraph c5(5, 2, true, {Edge{0, 1}, Edge{1, 2}, Edge{2, 3}, Edge{3, 4}, Edge{0, 4}});
  const auto ends = enumerate_ends(c5, 2, EndMode::zigzag);
  std::set<std::vector<Vertex>> images;
  for (const auto& e : ends.stuck) CHECK(images.insert(project_g(e)).second);
  const auto report = verify_counting(c5, 3, EndMode::zigzag);
  CHECK(report.violations() == 0);
}

TEST_CASE("zigzag-free graphs give the counting corollary") {
  const auto h = clique_union(6, 3);
  const auto report = verify_counting(h, 3, EndMode::zigzag);
  CHECK(report.violations() == 0);
  CHECK(report.rows[2].s_k == 0);
  const long long r = 2;
  CHECK(r * static_cast<long long>(h.size()) <= (r - 1) * 2 * static_cast<long long>(shadow(h).size()));
}

TEST_CASE("empty hypergraph passes with zeros") {
  const auto report = verify_counting(Hypergraph(5, 2, true), 3, EndMode::zigzag);
  CHECK(report.violations() == 0);
  for (const auto& row : report.rows) {
    CHECK(row.s_k == 0);
    CHECK(row.t_k == 0);
  }
}

TEST_CASE("good-path mode with one block equals zigzag counts on r = 2") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    const auto h = oracle::random_hypergraph(6, 2, true, 0.5, rng);
    auto one = std::make_shared<const BlockColoring>(6, 1, std::vector<int>(6, 0));
    const auto good = verify_counting(h, 3, EndMode::good_path, one);
    const auto zig = verify_counting(h, 3, EndMode::zigzag);
    CHECK(good.violations() == 0);
    CHECK(good.rows[0].s_k == 2 * h.size());
    for (int i = 0; i < 3; ++i) CHECK(good.rows[i].s_k == zig.rows[i].s_k);
  }
}

TEST_CASE("good-path counting on random r = 4 colorings") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 12; ++trial) {
    const auto h = oracle::random_hypergraph(8, 4, true, 0.6, rng);
    auto coloring = std::make_shared<const BlockColoring>(trial_coloring(8, 2, 17, trial));
    const auto report = verify_counting(h, 3, EndMode::good_path, coloring);
    CHECK(report.violations() == 0);
    CHECK(report.g_preimage_bound == 2);
  }
}

TEST_CASE("color restriction keeps edges with two vertices per block") {
  const BlockColoring c(8, 2, {0, 0, 0, 0, 1, 1, 1, 1});
  const Hypergraph h(8, 4, true, {Edge{0, 1, 4, 5}, Edge{0, 1, 2, 4}, Edge{2, 3, 6, 7}});
  const auto g = color_restrict(h, c);
  CHECK(g.size() == 2);
  const auto sh0 = block_shadow(g, c, 0);
  for (const Edge& e : sh0.edges()) CHECK(std::popcount(e.mask() & c.members(0)) == 1);
  CHECK(sh0.size() == 4);
}

TEST_CASE("trial colorings are reproducible per trial") {
  CHECK(trial_coloring(10, 2, 5, 3).assignment() == trial_coloring(10, 2, 5, 3).assignment());
  CHECK(trial_coloring(10, 2, 5, 3).assignment() != trial_coloring(10, 2, 5, 4).assignment());
}

TEST_CASE("partition experiment") {
  std::mt19937_64 rng(1);
  const auto g2 = oracle::random_hypergraph(7, 2, true, 0.5, rng);
  const auto flat = random_partition_experiment(g2, 0, 50);
  CHECK(flat.mean_g == doctest::Approx(static_cast<double>(g2.size())));
  CHECK(flat.target_g == doctest::Approx(static_cast<double>(g2.size())));

  const auto empty = random_partition_experiment(Hypergraph(8, 4, true), 0, 20);
  CHECK(empty.mean_g == 0);
  CHECK(empty.target_g == 0);

  CHECK_THROWS_AS(random_partition_experiment(g2, 0, 0), Error);
  CHECK_THROWS_AS(random_partition_experiment(Hypergraph(6, 3, true), 0, 5), Error);

  const auto h4 = oracle::random_with_edges(10, 4, true, 60, rng);
  const auto rep = random_partition_experiment(h4, 3, 2000);
  CHECK(rep.target_g == doctest::Approx(60.0 * 3 / 8));
  CHECK(std::abs(rep.mean_g - rep.target_g) <= 5 * rep.stderr_g);
  const auto again = random_partition_experiment(h4, 3, 2000);
  CHECK(again.mean_g == rep.mean_g);
}
