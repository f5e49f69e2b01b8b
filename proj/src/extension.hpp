#pragma once

// End-extension counting machinery.
//
// An end is the ordered last edge (v_{k-1}, ..., v_{k+r-2}) of a k-zigzag, or
// of a good k-path under a block coloring. Its interval I runs clockwise from
// v_{k-1} to v_k when k is odd and from v_{k+r-2} to v_{k-1} when k is even,
// inside the whole ground set (zigzag mode) or inside the block of v_{k-1}
// (good-path mode). X collects the vertices v of I, other than the end's own
// vertices, with v + {v_k..v_{k+r-2}} an edge. S_k is the set of all ends of
// k-paths and T_k those ends with empty X.

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "patterns.hpp"

namespace tightpath {

enum class EndMode { zigzag, good_path };

std::string to_string(EndMode mode);

struct End {
  std::vector<Vertex> tuple;
  int k = 1;
  EndMode mode = EndMode::zigzag;
  std::shared_ptr<const BlockColoring> coloring;  // good_path mode only
};

struct IntervalAndX {
  std::vector<Vertex> interval;
  std::vector<Vertex> extension_set;  // in interval order
};

IntervalAndX interval_and_X(const Hypergraph& h, const End& end);

// The (k+1)-end reached by the element of X closest to v_{k-1} along I.
// Throws Error(stuck_end) when X is empty.
End extend_f(const Hypergraph& h, const End& end);

// (v_k, ..., v_{k+r-2}).
std::vector<Vertex> project_g(const End& end);

// Calls `visit` on every k-zigzag (or good k-path) of h, in DFS order.
void for_each_path(const Hypergraph& h, int k, EndMode mode,
                   const std::shared_ptr<const BlockColoring>& coloring,
                   const std::function<void(const std::vector<Vertex>&)>& visit);

struct EndSets {
  int k = 0;
  std::vector<End> all;    // S_k, sorted by tuple
  std::vector<End> stuck;  // T_k
};

EndSets enumerate_ends(const Hypergraph& h, int k, EndMode mode,
                       std::shared_ptr<const BlockColoring> coloring = nullptr);

// G: the edges of h with exactly two vertices in every block.
Hypergraph color_restrict(const Hypergraph& h, const BlockColoring& coloring);

// The members of shadow(g) meeting block i in exactly one vertex.
Hypergraph block_shadow(const Hypergraph& g, const BlockColoring& coloring, int block);

struct CountingRow {
  int k = 0;
  std::size_t s_k = 0;
  std::size_t t_k = 0;
  std::size_t s_next = 0;
  long long lower_bound = 0;  // cumulative lower bound on |S_k|
  long long t_bound = 0;      // upper bound on |T_k|
  std::size_t f_collisions = 0;
  std::size_t f_invalid = 0;  // extensions that leave S_{k+1} or fail the order test
  std::size_t g_collisions = 0;
  std::size_t g_max_preimages = 0;
  std::size_t g_outside_shadow = 0;

  bool lower_ok() const { return static_cast<long long>(s_k) >= lower_bound; }
  bool t_ok() const { return static_cast<long long>(t_k) <= t_bound; }
  bool extension_ok() const { return s_next + t_k >= s_k; }
  bool f_ok() const { return f_collisions == 0 && f_invalid == 0; }
};

struct CountingReport {
  EndMode mode = EndMode::zigzag;
  int r = 0;
  std::size_t edges = 0;   // |H|, or |G| in good-path mode
  std::size_t shadow = 0;  // |shadow(H)|
  std::vector<std::size_t> block_shadows;  // |shadow_i(G)|, good-path mode
  std::size_t g_preimage_bound = 0;
  std::vector<CountingRow> rows;

  bool g_ok(const CountingRow& row) const {
    return row.g_collisions == 0 && row.g_outside_shadow == 0 &&
           row.g_max_preimages <= g_preimage_bound;
  }
  std::size_t violations() const;
};

CountingReport verify_counting(const Hypergraph& h, int k_max, EndMode mode,
                               std::shared_ptr<const BlockColoring> coloring = nullptr);

nlohmann::json to_json(const CountingReport& report);

struct ExperimentReport {
  std::uint64_t seed = 0;
  long long trials = 0;
  int r = 0;
  std::size_t edges = 0;
  std::size_t shadow = 0;
  double mean_g = 0;
  double stderr_g = 0;
  double target_g = 0;  // r!/(2^s s^r) |H|
  std::vector<double> mean_shadow;
  std::vector<double> stderr_shadow;
  double bound_shadow = 0;  // (r-1)!/(2^{s-1} s^{r-1}) |shadow(H)|
};

// Uniform s-coloring for one trial; trial t of seed x always gets the same
// colors regardless of how trials are scheduled.
BlockColoring trial_coloring(int n, int s, std::uint64_t seed, std::uint64_t trial);

ExperimentReport random_partition_experiment(const Hypergraph& h, std::uint64_t seed,
                                             long long trials);

nlohmann::json to_json(const ExperimentReport& report);

}  // namespace tightpath
