#include "patterns.hpp"

#include <algorithm>

#include "pattern_plans.hpp"
#include "sub_edges.hpp"

namespace tightpath {

std::string to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::tight_path: return "tight_path";
    case PatternKind::zigzag: return "zigzag";
    case PatternKind::stack: return "stack";
    case PatternKind::good_path: return "good_path";
  }
  return "unknown";
}

PatternKind pattern_kind_from_string(const std::string& name) {
  if (name == "tight_path") return PatternKind::tight_path;
  if (name == "zigzag") return PatternKind::zigzag;
  if (name == "stack") return PatternKind::stack;
  if (name == "good_path") return PatternKind::good_path;
  fail(ErrorKind::domain, "unknown pattern kind '" + name + "'");
}

nlohmann::json to_json(const PathWitness& w) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : w.edges) edges.push_back(e.vertices());
  return {{"kind", to_string(w.kind)}, {"k", w.k}, {"sequence", w.sequence}, {"edges", edges}};
}

BlockColoring::BlockColoring(int n, int s, std::vector<int> block_of)
    : s_(s), block_of_(std::move(block_of)), members_(s > 0 ? s : 0, 0) {
  require(s >= 1, ErrorKind::domain, "coloring needs at least one block");
  require(static_cast<int>(block_of_.size()) == n, ErrorKind::domain,
          "coloring must assign every ground vertex");
  require(n <= kMaxVertices, ErrorKind::domain, "coloring ground too large");
  for (int v = 0; v < n; ++v) {
    const int b = block_of_[v];
    require(b >= 0 && b < s, ErrorKind::domain,
            "vertex " + std::to_string(v) + " has block " + std::to_string(b) + " outside 0.." +
                std::to_string(s - 1));
    members_[b] |= vertex_bit(v);
  }
}

int BlockColoring::block(Vertex v) const {
  require(v >= 0 && v < n(), ErrorKind::domain,
          "vertex " + std::to_string(v) + " missing from coloring");
  return block_of_[v];
}

std::vector<Vertex> BlockColoring::segment(Vertex u, Vertex v) const {
  const int b = block(u);
  require(block(v) == b, ErrorKind::domain, "segment endpoints lie in different blocks");
  const auto ids = mask_vertices(members_[b]);
  const auto start = std::find(ids.begin(), ids.end(), u) - ids.begin();
  const auto m = static_cast<std::ptrdiff_t>(ids.size());
  std::vector<Vertex> out;
  for (std::ptrdiff_t i = start;; i = (i + 1) % m) {
    out.push_back(ids[i]);
    if (ids[i] == v) break;
  }
  return out;
}

namespace {

void check_sequence(const CyclicGround& ground, const std::vector<Vertex>& sequence) {
  VertexMask seen = 0;
  for (Vertex v : sequence) {
    ground.check(v);
    require(!((seen >> v) & 1U), ErrorKind::domain,
            "sequence repeats vertex " + std::to_string(v));
    seen |= vertex_bit(v);
  }
}

void check_even_r(int r) {
  require(r >= 2, ErrorKind::domain, "uniformity must be at least 2");
  require(r % 2 == 0, ErrorKind::unsupported_pattern,
          "zigzag orderings are defined only for even r, got r=" + std::to_string(r));
}

bool positions_monotone(const std::vector<Vertex>& sequence, const std::vector<int>& positions) {
  std::vector<Vertex> vs;
  vs.reserve(positions.size());
  for (int p : positions) vs.push_back(sequence[p]);
  return detail::cyclically_monotone(vs.data(), static_cast<int>(vs.size()));
}

}  // namespace

bool is_zigzag_sequence(const CyclicGround& ground, const std::vector<Vertex>& sequence, int r) {
  check_even_r(r);
  check_sequence(ground, sequence);
  require(static_cast<int>(sequence.size()) >= r, ErrorKind::domain,
          "a zigzag sequence needs at least r vertices");
  const int length = static_cast<int>(sequence.size());
  return positions_monotone(sequence, detail::zigzag_position_order(length, r));
}

bool is_good_path(const CyclicGround& ground, const std::vector<Vertex>& sequence,
                  const BlockColoring& coloring, int r) {
  check_even_r(r);
  require(coloring.blocks() == r / 2, ErrorKind::domain, "good paths need s = r/2 blocks");
  require(coloring.n() == ground.size(), ErrorKind::domain, "coloring and ground differ in size");
  check_sequence(ground, sequence);
  const int length = static_cast<int>(sequence.size());
  for (int j = 0; j < length; ++j) {
    if (coloring.block(sequence[j]) != good_path_block(j, r / 2)) return false;
  }
  for (const auto& group : detail::good_path_groups(length, r)) {
    if (!positions_monotone(sequence, group)) return false;
  }
  return true;
}

bool is_tight_path(const Hypergraph& h, const std::vector<Vertex>& sequence) {
  const int r = h.r();
  const int length = static_cast<int>(sequence.size());
  if (length < r) return false;
  check_sequence(h.ground(), sequence);
  for (int s = 0; s + r <= length; ++s) {
    VertexMask m = 0;
    for (int q = s; q < s + r; ++q) m |= vertex_bit(sequence[q]);
    if (!h.contains(m)) return false;
  }
  return true;
}

void check_pattern_support(const Hypergraph& h, PatternKind kind) {
  switch (kind) {
    case PatternKind::tight_path:
      return;
    case PatternKind::zigzag:
    case PatternKind::stack:
      require(h.geometric(), ErrorKind::unsupported_pattern,
              to_string(kind) + " needs a convex geometric hypergraph");
      check_even_r(h.r());
      return;
    case PatternKind::good_path:
      fail(ErrorKind::unsupported_pattern,
           "good paths depend on a block coloring; use the extension module");
  }
}

namespace detail {

// Positions of block i in a good path: classes 2i ascending then 2i+1
// descending, mod r.
std::vector<std::vector<int>> good_path_groups(int length, int r) {
  const int s = r / 2;
  std::vector<std::vector<int>> groups(s);
  for (int i = 0; i < s; ++i) {
    for (int p = 2 * i; p < length; p += r) groups[i].push_back(p);
    std::vector<int> odd;
    for (int p = 2 * i + 1; p < length; p += r) odd.push_back(p);
    groups[i].insert(groups[i].end(), odd.rbegin(), odd.rend());
  }
  return groups;
}

FillPlan pattern_plan(PatternKind kind, int k, int r) {
  FillPlan plan;
  plan.r = r;
  if (kind == PatternKind::stack) {
    plan.length = k * r;
    for (int i = 0; i < k; ++i) plan.windows.push_back(i * r);
  } else {
    plan.length = k + r - 1;
    for (int i = 0; i < k; ++i) plan.windows.push_back(i);
  }
  if (kind != PatternKind::tight_path) {
    plan.cyclic_groups.push_back(zigzag_position_order(plan.length, r));
  }
  return plan;
}

}  // namespace detail

std::optional<PathWitness> find_pattern(const Hypergraph& h, PatternKind kind, int k) {
  check_pattern_support(h, kind);
  require(k >= 1, ErrorKind::domain, "pattern length k must be positive");
  auto plan = detail::pattern_plan(kind, k, h.r());
  if (plan.length > h.n() || h.empty()) return std::nullopt;
  plan.order = detail::FillPlan::iota_order(plan.length);
  plan.prepare({});

  const HypergraphHost host(h);
  std::optional<PathWitness> found;
  auto visit = [&](const std::vector<Vertex>& seq) {
    PathWitness w{kind, k, seq, {}};
    for (int s : plan.windows) {
      w.edges.emplace_back(vertices_mask(std::span<const Vertex>(seq.data() + s, h.r())));
    }
    found = std::move(w);
    return true;
  };
  std::vector<Vertex> seq(plan.length, -1);
  detail::SequenceFiller<HypergraphHost, decltype(visit)> filler(plan, host, h.n(), visit);
  filler.run(seq);
  return found;
}

}  // namespace tightpath
