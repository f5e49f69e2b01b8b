#include "constructions.hpp"

namespace tightpath {
namespace {

void check_even_uniformity(int r) {
  require(r >= 2, ErrorKind::domain, "uniformity must be at least 2");
  require(r % 2 == 0, ErrorKind::unsupported_pattern,
          "construction is defined only for even r, got r=" + std::to_string(r));
}

}  // namespace

std::vector<Hypergraph> stack_free_parts(int n, int r, int k) {
  check_even_uniformity(r);
  require(k >= 1, ErrorKind::domain, "k must be positive");
  require(n >= r, ErrorKind::domain, "need n >= r");
  const CyclicGround ground(n);

  std::vector<std::vector<Edge>> parts(k);
  for (VertexMask mask : k_subsets(n, r)) {
    const auto v = mask_vertices(mask);
    if (v[0] == 0) {
      parts[0].emplace_back(mask);
      continue;
    }
    for (int h = 0; h < r; ++h) {
      const int j = ground.arc_length(v[h], v[(h + 1) % r]);
      if (j >= 1 && j <= k - 2) {
        // One edge may qualify for several j; record it once per part.
        auto& part = parts[j];
        if (part.empty() || part.back().mask() != mask) part.emplace_back(mask);
      }
    }
    if (k >= 2) {
      for (int h = 1; h <= r / 2 - 1; ++h) {
        const int len = ground.arc_length(v[2 * h - 1], v[2 * h]);
        if (len == k - 1 || len == k) {
          parts[k - 1].emplace_back(mask);
          break;
        }
      }
    }
  }
  std::vector<Hypergraph> out;
  out.reserve(k);
  for (auto& p : parts) out.emplace_back(n, r, true, std::move(p));
  return out;
}

Hypergraph stack_free(int n, int r, int k) {
  std::vector<Edge> all;
  for (const auto& part : stack_free_parts(n, r, k)) {
    all.insert(all.end(), part.edges().begin(), part.edges().end());
  }
  return Hypergraph(n, r, true, std::move(all));
}

Hypergraph short_side(int n, int r, int k) {
  check_even_uniformity(r);
  require(k >= 3 && k % 2 == 1, ErrorKind::domain,
          "short-side construction needs odd k >= 3, got k=" + std::to_string(k));
  require(n >= r, ErrorKind::domain, "need n >= r");
  const CyclicGround ground(n);
  std::vector<Edge> edges;
  for (VertexMask mask : k_subsets(n, r)) {
    const auto v = mask_vertices(mask);
    bool close = false;
    for (std::size_t a = 0; a < v.size() && !close; ++a) {
      for (std::size_t b = a + 1; b < v.size() && !close; ++b) {
        close = ground.arc_length(v[a], v[b]) <= k - 1;
      }
    }
    if (close) edges.emplace_back(mask);
  }
  return Hypergraph(n, r, true, std::move(edges));
}

Hypergraph clique_union(int n, int k) {
  require(k >= 1, ErrorKind::domain, "clique order must be positive");
  require(n >= 2, ErrorKind::domain, "need n >= 2 for a graph");
  std::vector<Edge> edges;
  for (int start = 0; start < n; start += k) {
    const int end = std::min(n, start + k);
    for (int a = start; a < end; ++a) {
      for (int b = a + 1; b < end; ++b) edges.push_back(Edge{a, b});
    }
  }
  return Hypergraph(n, 2, true, std::move(edges));
}

std::vector<Hypergraph> transversal_parts(int n, int r, int k) {
  check_even_uniformity(r);
  require(k >= 1, ErrorKind::domain, "k must be positive");
  const int s = r / 2;
  require(n % s == 0, ErrorKind::domain, "block count s = r/2 must divide n");
  require((k - 1) % r == 0, ErrorKind::domain, "r must divide k-1");
  const int size = n / s;
  const int a = (k - 1) / r;
  require(a < size, ErrorKind::domain, "transversal size (k-1)/r must be below n/s");

  auto range_mask = [](int lo, int hi) {
    VertexMask m = 0;
    for (int v = lo; v < hi; ++v) m |= vertex_bit(v);
    return m;
  };
  std::vector<VertexMask> head(s);  // A_i
  std::vector<VertexMask> tail(s);  // B_i \ A_i
  for (int i = 0; i < s; ++i) {
    head[i] = range_mask(i * size, i * size + a);
    tail[i] = range_mask(i * size + a, (i + 1) * size);
  }

  std::vector<Hypergraph> out;
  for (int i = 0; i < s; ++i) {
    std::vector<Edge> edges;
    for (VertexMask mask : k_subsets(n, r)) {
      bool ok = std::popcount(mask & head[i]) == 1 && std::popcount(mask & tail[i]) == 1;
      for (int j = 0; j < s && ok; ++j) {
        if (j != i) ok = std::popcount(mask & tail[j]) == 2;
      }
      if (ok) edges.emplace_back(mask);
    }
    out.emplace_back(n, r, false, std::move(edges));
  }
  return out;
}

Hypergraph transversal_blocks(int n, int r, int k) {
  std::vector<Edge> all;
  for (const auto& part : transversal_parts(n, r, k)) {
    all.insert(all.end(), part.edges().begin(), part.edges().end());
  }
  return Hypergraph(n, r, false, std::move(all));
}

Hypergraph lift_plus(const Hypergraph& h, int m) {
  require(m >= 1, ErrorKind::domain, "lift needs at least one fresh vertex");
  const int n = h.n() + m;
  require(n <= kMaxVertices, ErrorKind::domain, "lifted ground exceeds 64 vertices");
  std::vector<Edge> edges;
  edges.reserve(h.size() * m);
  for (int x = h.n(); x < n; ++x) {
    for (const Edge& e : h.edges()) edges.emplace_back(e.mask() | vertex_bit(x));
  }
  return Hypergraph(n, h.r() + 1, false, std::move(edges));
}

int phi(int ell, int r) {
  require(ell >= 1, ErrorKind::domain, "phi needs ell >= 1");
  require(r >= 2, ErrorKind::domain, "phi needs r >= 2");
  return (ell + r + r) / (r + 1);
}

}  // namespace tightpath
