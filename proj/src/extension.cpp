#include "extension.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "pattern_plans.hpp"
#include "sub_edges.hpp"

namespace tightpath {

std::string to_string(EndMode mode) {
  return mode == EndMode::zigzag ? "zigzag" : "good_path";
}

namespace {

void check_mode(const Hypergraph& h, EndMode mode, const BlockColoring* coloring) {
  require(h.r() >= 2, ErrorKind::domain, "uniformity must be at least 2");
  require(h.r() % 2 == 0, ErrorKind::unsupported_pattern,
          "end extension needs even r, got r=" + std::to_string(h.r()));
  if (mode == EndMode::zigzag) {
    require(h.geometric(), ErrorKind::unsupported_pattern,
            "zigzag ends need a convex geometric hypergraph");
  } else {
    require(coloring != nullptr, ErrorKind::unsupported_pattern,
            "good-path ends need a block coloring");
    require(coloring->blocks() == h.r() / 2, ErrorKind::domain, "good paths need s = r/2 blocks");
    require(coloring->n() == h.n(), ErrorKind::domain, "coloring and hypergraph differ in size");
  }
}

void check_end(const Hypergraph& h, const End& end) {
  check_mode(h, end.mode, end.coloring.get());
  require(end.k >= 1, ErrorKind::domain, "end length k must be positive");
  require(static_cast<int>(end.tuple.size()) == h.r(), ErrorKind::domain,
          "end tuple must have r vertices");
  VertexMask seen = 0;
  for (Vertex v : end.tuple) {
    h.ground().check(v);
    require(!((seen >> v) & 1U), ErrorKind::domain, "end tuple repeats a vertex");
    seen |= vertex_bit(v);
  }
  if (end.mode == EndMode::good_path) {
    require(end.coloring->block(end.tuple[0]) == good_path_block(end.k - 1, h.r() / 2),
            ErrorKind::domain, "end's first vertex lies outside block h(k-1)");
  }
}

VertexMask tuple_mask(const std::vector<Vertex>& tuple) {
  VertexMask m = 0;
  for (Vertex v : tuple) m |= vertex_bit(v);
  return m;
}

detail::FillPlan path_plan(const Hypergraph& h, int k, EndMode mode,
                           const BlockColoring* coloring) {
  if (mode == EndMode::zigzag) {
    auto plan = detail::pattern_plan(PatternKind::zigzag, k, h.r());
    plan.order = detail::FillPlan::iota_order(plan.length);
    return plan;
  }
  detail::FillPlan plan;
  plan.r = h.r();
  plan.length = k + h.r() - 1;
  for (int i = 0; i < k; ++i) plan.windows.push_back(i);
  plan.cyclic_groups = detail::good_path_groups(plan.length, h.r());
  for (int p = 0; p < plan.length; ++p) {
    plan.allowed.push_back(coloring->members(good_path_block(p, h.r() / 2)));
  }
  plan.order = detail::FillPlan::iota_order(plan.length);
  return plan;
}

std::vector<Vertex> last_window(const std::vector<Vertex>& seq, int r) {
  return {seq.end() - r, seq.end()};
}

bool order_holds(const Hypergraph& h, const std::vector<Vertex>& seq, EndMode mode,
                 const BlockColoring* coloring) {
  if (mode == EndMode::zigzag) return is_zigzag_sequence(h.ground(), seq, h.r());
  return is_good_path(h.ground(), seq, *coloring, h.r());
}

}  // namespace

IntervalAndX interval_and_X(const Hypergraph& h, const End& end) {
  check_end(h, end);
  const int r = h.r();
  const Vertex first = end.tuple[0];
  const bool odd = end.k % 2 == 1;
  const Vertex from = odd ? first : end.tuple[r - 1];
  const Vertex to = odd ? end.tuple[1] : first;

  IntervalAndX out;
  out.interval = end.mode == EndMode::zigzag ? h.ground().segment(from, to)
                                             : end.coloring->segment(from, to);
  const VertexMask own = tuple_mask(end.tuple);
  const VertexMask rest = own & ~vertex_bit(first);
  for (Vertex v : out.interval) {
    if ((own >> v) & 1U) continue;
    if (h.contains(rest | vertex_bit(v))) out.extension_set.push_back(v);
  }
  return out;
}

End extend_f(const Hypergraph& h, const End& end) {
  const auto ix = interval_and_X(h, end);
  require(!ix.extension_set.empty(), ErrorKind::stuck_end, "end cannot be extended: X is empty");
  // v_{k-1} starts the interval for odd k and ends it for even k.
  const Vertex chosen =
      end.k % 2 == 1 ? ix.extension_set.front() : ix.extension_set.back();
  End next{{end.tuple.begin() + 1, end.tuple.end()}, end.k + 1, end.mode, end.coloring};
  next.tuple.push_back(chosen);
  return next;
}

std::vector<Vertex> project_g(const End& end) { return {end.tuple.begin() + 1, end.tuple.end()}; }

void for_each_path(const Hypergraph& h, int k, EndMode mode,
                   const std::shared_ptr<const BlockColoring>& coloring,
                   const std::function<void(const std::vector<Vertex>&)>& visit) {
  check_mode(h, mode, coloring.get());
  require(k >= 1, ErrorKind::domain, "path length k must be positive");
  auto plan = path_plan(h, k, mode, coloring.get());
  if (plan.length > h.n() || h.empty()) return;
  plan.prepare({});
  const HypergraphHost host(h);
  auto visitor = [&](const std::vector<Vertex>& seq) {
    visit(seq);
    return false;
  };
  std::vector<Vertex> seq(plan.length, -1);
  detail::SequenceFiller<HypergraphHost, decltype(visitor)> filler(plan, host, h.n(), visitor);
  filler.run(seq);
}

EndSets enumerate_ends(const Hypergraph& h, int k, EndMode mode,
                       std::shared_ptr<const BlockColoring> coloring) {
  std::set<std::vector<Vertex>> tuples;
  for_each_path(h, k, mode, coloring,
                [&](const std::vector<Vertex>& seq) { tuples.insert(last_window(seq, h.r())); });
  EndSets out;
  out.k = k;
  for (const auto& t : tuples) {
    End e{t, k, mode, coloring};
    if (interval_and_X(h, e).extension_set.empty()) out.stuck.push_back(e);
    out.all.push_back(std::move(e));
  }
  return out;
}

Hypergraph color_restrict(const Hypergraph& h, const BlockColoring& coloring) {
  require(coloring.n() == h.n(), ErrorKind::domain, "coloring and hypergraph differ in size");
  std::vector<Edge> kept;
  for (const Edge& e : h.edges()) {
    bool two_each = true;
    for (int b = 0; b < coloring.blocks() && two_each; ++b) {
      two_each = std::popcount(e.mask() & coloring.members(b)) == 2;
    }
    if (two_each) kept.push_back(e);
  }
  return Hypergraph(h.n(), h.r(), h.geometric(), std::move(kept));
}

Hypergraph block_shadow(const Hypergraph& g, const BlockColoring& coloring, int block) {
  require(block >= 0 && block < coloring.blocks(), ErrorKind::domain, "block index out of range");
  const Hypergraph sh = shadow(g);
  std::vector<Edge> kept;
  for (const Edge& e : sh.edges()) {
    if (std::popcount(e.mask() & coloring.members(block)) == 1) kept.push_back(e);
  }
  return Hypergraph(g.n(), g.r() - 1, g.geometric(), std::move(kept));
}

std::size_t CountingReport::violations() const {
  std::size_t bad = 0;
  for (const auto& row : rows) {
    bad += !row.lower_ok();
    bad += !row.t_ok();
    bad += !row.extension_ok();
    bad += !row.f_ok();
    bad += !g_ok(row);
  }
  return bad;
}

CountingReport verify_counting(const Hypergraph& input, int k_max, EndMode mode,
                               std::shared_ptr<const BlockColoring> coloring) {
  check_mode(input, mode, coloring.get());
  require(k_max >= 1, ErrorKind::domain, "k_max must be positive");
  const int r = input.r();
  const int s = r / 2;

  // Good paths only use edges with two vertices per block, so G carries
  // exactly the same paths and extension sets as H.
  const Hypergraph h = mode == EndMode::good_path ? color_restrict(input, *coloring) : input;
  const Hypergraph sh = shadow(input);

  CountingReport report;
  report.mode = mode;
  report.r = r;
  report.edges = h.size();
  report.shadow = sh.size();
  std::vector<Hypergraph> block_sh;
  if (mode == EndMode::good_path) {
    for (int b = 0; b < s; ++b) {
      block_sh.push_back(block_shadow(h, *coloring, b));
      report.block_shadows.push_back(block_sh.back().size());
    }
    report.g_preimage_bound = std::size_t{1} << (s - 1);
  } else {
    report.g_preimage_bound = static_cast<std::size_t>(r - 1);
  }

  std::vector<EndSets> levels;
  for (int k = 1; k <= k_max + 1; ++k) levels.push_back(enumerate_ends(h, k, mode, coloring));

  long long block_sum = 0;  // sum over i <= k-2 of |shadow_{h(i)} G|
  for (int k = 1; k <= k_max; ++k) {
    const EndSets& cur = levels[k - 1];
    const EndSets& nxt = levels[k];
    CountingRow row;
    row.k = k;
    row.s_k = cur.all.size();
    row.t_k = cur.stuck.size();
    row.s_next = nxt.all.size();

    if (mode == EndMode::zigzag) {
      row.lower_bound = static_cast<long long>(r) * static_cast<long long>(h.size()) -
                        static_cast<long long>(r - 1) * (k - 1) * static_cast<long long>(sh.size());
      row.t_bound = static_cast<long long>(r - 1) * static_cast<long long>(sh.size());
    } else {
      if (k >= 2) block_sum += static_cast<long long>(block_sh[good_path_block(k - 2, s)].size());
      row.lower_bound = (1LL << s) * static_cast<long long>(h.size()) - (1LL << (s - 1)) * block_sum;
      row.t_bound =
          (1LL << (s - 1)) * static_cast<long long>(block_sh[good_path_block(k - 1, s)].size());
    }

    // f: injective on S_k \ T_k, lands in S_{k+1}.
    std::set<std::vector<Vertex>> next_tuples;
    for (const End& e : nxt.all) next_tuples.insert(e.tuple);
    std::map<std::vector<Vertex>, Vertex> image;  // f(end) -> last vertex of the source
    std::map<std::vector<Vertex>, Vertex> chosen;  // source tuple -> appended vertex
    for (const End& e : cur.all) {
      const auto ix = interval_and_X(h, e);
      if (ix.extension_set.empty()) continue;
      const End f = extend_f(h, e);
      chosen[e.tuple] = f.tuple.back();
      if (!next_tuples.contains(f.tuple)) ++row.f_invalid;
      if (!image.emplace(f.tuple, e.tuple[0]).second) ++row.f_collisions;
    }
    // Every k-path with a non-stuck end must extend to a valid (k+1)-path.
    for_each_path(h, k, mode, coloring, [&](const std::vector<Vertex>& seq) {
      const auto it = chosen.find(last_window(seq, r));
      if (it == chosen.end()) return;
      std::vector<Vertex> longer = seq;
      longer.push_back(it->second);
      if (!is_tight_path(h, longer) || !order_holds(h, longer, mode, coloring.get())) {
        ++row.f_invalid;
      }
    });

    // g: injective on T_k with bounded preimages per shadow set.
    std::set<std::vector<Vertex>> g_images;
    std::map<VertexMask, std::size_t> per_set;
    const Hypergraph* target = mode == EndMode::zigzag ? &sh : &block_sh[good_path_block(k - 1, s)];
    for (const End& e : cur.stuck) {
      const auto g = project_g(e);
      if (!g_images.insert(g).second) ++row.g_collisions;
      const VertexMask m = vertices_mask(g);
      if (!target->contains(m)) ++row.g_outside_shadow;
      row.g_max_preimages = std::max(row.g_max_preimages, ++per_set[m]);
    }
    report.rows.push_back(row);
  }
  return report;
}

nlohmann::json to_json(const CountingReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"k", row.k},
                    {"S_k", row.s_k},
                    {"T_k", row.t_k},
                    {"S_k_plus_1", row.s_next},
                    {"lower_bound", row.lower_bound},
                    {"T_bound", row.t_bound},
                    {"lower_ok", row.lower_ok()},
                    {"T_ok", row.t_ok()},
                    {"extension_ok", row.extension_ok()},
                    {"f_collisions", row.f_collisions},
                    {"f_invalid", row.f_invalid},
                    {"g_collisions", row.g_collisions},
                    {"g_max_preimages", row.g_max_preimages},
                    {"g_outside_shadow", row.g_outside_shadow},
                    {"g_ok", report.g_ok(row)}});
  }
  nlohmann::json out{{"mode", to_string(report.mode)},
                     {"r", report.r},
                     {"edges", report.edges},
                     {"shadow", report.shadow},
                     {"g_preimage_bound", report.g_preimage_bound},
                     {"violations", report.violations()},
                     {"rows", rows}};
  if (report.mode == EndMode::good_path) out["block_shadows"] = report.block_shadows;
  return out;
}

BlockColoring trial_coloring(int n, int s, std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> color(0, s - 1);
  std::vector<int> assignment(n);
  for (auto& c : assignment) c = color(rng);
  return BlockColoring(n, s, std::move(assignment));
}

ExperimentReport random_partition_experiment(const Hypergraph& h, std::uint64_t seed,
                                             long long trials) {
  require(trials > 0, ErrorKind::domain, "trials must be positive");
  require(h.r() >= 2, ErrorKind::domain, "uniformity must be at least 2");
  require(h.r() % 2 == 0, ErrorKind::unsupported_pattern,
          "the partition experiment needs even r, got r=" + std::to_string(h.r()));
  const int r = h.r();
  const int s = r / 2;
  const std::size_t shadow_size = shadow(h).size();

  double sum_g = 0;
  double sq_g = 0;
  std::vector<double> sum_sh(s, 0.0);
  std::vector<double> sq_sh(s, 0.0);
  for (long long t = 0; t < trials; ++t) {
    const auto coloring = trial_coloring(h.n(), s, seed, static_cast<std::uint64_t>(t));
    const Hypergraph g = color_restrict(h, coloring);
    const double gs = static_cast<double>(g.size());
    sum_g += gs;
    sq_g += gs * gs;
    if (g.empty()) continue;
    for (int b = 0; b < s; ++b) {
      const double bs = static_cast<double>(block_shadow(g, coloring, b).size());
      sum_sh[b] += bs;
      sq_sh[b] += bs * bs;
    }
  }

  const auto tn = static_cast<double>(trials);
  auto stderr_of = [tn](double sum, double sq) {
    if (tn < 2) return 0.0;
    const double mean = sum / tn;
    const double var = std::max(0.0, (sq - tn * mean * mean) / (tn - 1));
    return std::sqrt(var / tn);
  };
  auto factorial = [](int m) {
    double f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };

  ExperimentReport out;
  out.seed = seed;
  out.trials = trials;
  out.r = r;
  out.edges = h.size();
  out.shadow = shadow_size;
  out.mean_g = sum_g / tn;
  out.stderr_g = stderr_of(sum_g, sq_g);
  out.target_g = factorial(r) / (std::pow(2.0, s) * std::pow(s, r)) * static_cast<double>(h.size());
  for (int b = 0; b < s; ++b) {
    out.mean_shadow.push_back(sum_sh[b] / tn);
    out.stderr_shadow.push_back(stderr_of(sum_sh[b], sq_sh[b]));
  }
  out.bound_shadow = factorial(r - 1) / (std::pow(2.0, s - 1) * std::pow(s, r - 1)) *
                     static_cast<double>(shadow_size);
  return out;
}

nlohmann::json to_json(const ExperimentReport& report) {
  return {{"seed", report.seed},
          {"trials", report.trials},
          {"r", report.r},
          {"edges", report.edges},
          {"shadow", report.shadow},
          {"mean_G", report.mean_g},
          {"target_G", report.target_g},
          {"stderr", report.stderr_g},
          {"mean_shadow_i", report.mean_shadow},
          {"stderr_shadow_i", report.stderr_shadow},
          {"bound_shadow", report.bound_shadow}};
}

}  // namespace tightpath
