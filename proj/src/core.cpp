#include "core.hpp"

#include <algorithm>
#include <string>

namespace tightpath {

std::vector<Vertex> mask_vertices(VertexMask mask) {
  std::vector<Vertex> out;
  out.reserve(std::popcount(mask));
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

VertexMask vertices_mask(std::span<const Vertex> vertices) {
  VertexMask mask = 0;
  for (Vertex v : vertices) {
    require(v >= 0 && v < kMaxVertices, ErrorKind::domain,
            "vertex id " + std::to_string(v) + " outside supported range");
    require(!((mask >> v) & 1U), ErrorKind::domain,
            "repeated vertex " + std::to_string(v));
    mask |= vertex_bit(v);
  }
  return mask;
}

CyclicGround::CyclicGround(int n) : n_(n) {
  require(n >= 1 && n <= kMaxVertices, ErrorKind::domain,
          "ground size must be in [1, 64], got " + std::to_string(n));
}

void CyclicGround::check(Vertex v) const {
  require(contains(v), ErrorKind::domain,
          "vertex " + std::to_string(v) + " not in ground set of size " + std::to_string(n_));
}

std::vector<Vertex> CyclicGround::segment(Vertex u, Vertex v) const {
  check(u);
  check(v);
  std::vector<Vertex> out{u};
  for (Vertex w = u; w != v;) {
    w = next(w);
    out.push_back(w);
  }
  return out;
}

int CyclicGround::arc_length(Vertex u, Vertex v) const {
  check(u);
  check(v);
  const int cw = steps(u, v);
  return std::min(cw, steps(v, u));
}

Edge::Edge(std::span<const Vertex> vertices) : mask_(vertices_mask(vertices)) {}

Edge::Edge(std::initializer_list<Vertex> vertices)
    : mask_(vertices_mask(std::span<const Vertex>(vertices.begin(), vertices.size()))) {}

bool Edge::operator<(const Edge& other) const {
  if (mask_ == other.mask_) return false;
  if (size() == other.size()) {
    // The lowest differing vertex decides: the set holding it is smaller.
    const VertexMask diff = mask_ ^ other.mask_;
    return (diff & (~diff + 1) & mask_) != 0;
  }
  const auto a = vertices();
  const auto b = other.vertices();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Hypergraph::Hypergraph(int n, int r, bool geometric, std::vector<Edge> edges)
    : ground_(n), r_(r), geometric_(geometric), edges_(std::move(edges)) {
  require(r >= 1 && r <= n, ErrorKind::domain,
          "uniformity must satisfy 1 <= r <= n, got r=" + std::to_string(r) +
              " n=" + std::to_string(n));
  const VertexMask ground_mask = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  for (const Edge& e : edges_) {
    require(e.size() == r, ErrorKind::domain,
            "edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(r));
    require((e.mask() & ~ground_mask) == 0, ErrorKind::domain,
            "edge leaves the ground set of size " + std::to_string(n));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  index_.reserve(edges_.size());
  for (const Edge& e : edges_) index_.insert(e.mask());
}

Hypergraph Hypergraph::from_lists(int n, int r, bool geometric,
                                  const std::vector<std::vector<Vertex>>& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(std::span<const Vertex>(e));
  return Hypergraph(n, r, geometric, std::move(out));
}

std::size_t Hypergraph::degree(Vertex v) const {
  ground_.check(v);
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.contains(v); }));
}

Hypergraph Hypergraph::with_geometry(bool geometric) const {
  return Hypergraph(n(), r_, geometric, edges_);
}

Hypergraph shadow(const Hypergraph& h) {
  require(h.r() >= 2, ErrorKind::domain, "shadow needs uniformity at least 2");
  std::vector<Edge> out;
  out.reserve(h.size() * h.r());
  for (const Edge& e : h.edges()) {
    for (VertexMask rest = e.mask(); rest; rest &= rest - 1) {
      out.emplace_back(e.mask() & ~(rest & (~rest + 1)));
    }
  }
  return Hypergraph(h.n(), h.r() - 1, h.geometric(), std::move(out));
}

Hypergraph link(const Hypergraph& h, Vertex v) {
  h.ground().check(v);
  require(h.r() >= 2, ErrorKind::domain, "link needs uniformity at least 2");
  std::vector<Edge> out;
  for (const Edge& e : h.edges()) {
    if (e.contains(v)) out.emplace_back(e.mask() & ~vertex_bit(v));
  }
  return Hypergraph(h.n(), h.r() - 1, h.geometric(), std::move(out));
}

Hypergraph edge_union(const Hypergraph& a, const Hypergraph& b) {
  require(a.n() == b.n() && a.r() == b.r(), ErrorKind::domain,
          "union needs matching ground size and uniformity");
  std::vector<Edge> edges = a.edges();
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  return Hypergraph(a.n(), a.r(), a.geometric(), std::move(edges));
}

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return static_cast<long long>(out);
}

std::vector<VertexMask> k_subsets(int n, int k) {
  std::vector<VertexMask> out;
  if (k < 0 || k > n || n > kMaxVertices) return out;
  if (k == 0) return {0};
  if (k == 64) return {~VertexMask{0}};
  // Gosper's hack walks k-subsets in increasing numeric order, which is colex.
  VertexMask x = (VertexMask{1} << k) - 1;
  const VertexMask limit = n == 64 ? 0 : VertexMask{1} << n;
  while (true) {
    out.push_back(x);
    const VertexMask c = x & (~x + 1);
    const VertexMask r = x + c;
    if (r == 0) break;
    x = (((r ^ x) >> 2) / c) | r;
    if (limit != 0 && x >= limit) break;
  }
  return out;
}

}  // namespace tightpath
