#pragma once

// Independent reference implementations used as test oracles. None of these
// share code with the library's pattern engine.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "core.hpp"

namespace oracle {

using tightpath::Edge;
using tightpath::Hypergraph;
using tightpath::Vertex;

inline Hypergraph random_hypergraph(int n, int r, bool geometric, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - r, pick.end(), 1);
  do {
    if (!coin(rng)) continue;
    std::vector<Vertex> e;
    for (int v = 0; v < n; ++v) {
      if (pick[v]) e.push_back(v);
    }
    edges.emplace_back(std::span<const Vertex>(e));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return Hypergraph(n, r, geometric, std::move(edges));
}

inline Hypergraph random_with_edges(int n, int r, bool geometric, std::size_t m,
                                    std::mt19937_64& rng) {
  std::vector<std::vector<Vertex>> all;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - r, pick.end(), 1);
  do {
    std::vector<Vertex> e;
    for (int v = 0; v < n; ++v) {
      if (pick[v]) e.push_back(v);
    }
    all.push_back(e);
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(m, all.size()));
  return Hypergraph::from_lists(n, r, geometric, all);
}

// Segment-assignment reading of the zigzag definition: some clockwise walk
// from a start point splits into consecutive arcs I_0..I_{r-1} with class j
// inside I_j, listed in walk order ascending by index for even j and
// descending for odd j.
inline bool zigzag_by_segments(int n, const std::vector<Vertex>& seq, int r) {
  const int len = static_cast<int>(seq.size());
  std::vector<int> pos_of(n, -1);
  for (int i = 0; i < len; ++i) pos_of[seq[i]] = i;
  for (int start = 0; start < n; ++start) {
    std::vector<Vertex> walk(n);
    for (int t = 0; t < n; ++t) walk[t] = (start + t) % n;
    // cuts[j] = first walk index of I_{j+1}
    std::vector<int> cuts(r - 1, 0);
    std::function<bool(int, int)> choose = [&](int j, int from) -> bool {
      if (j == r - 1) {
        std::vector<std::vector<int>> seen(r);  // indices in walk order, per segment
        int seg = 0;
        for (int t = 0; t < n; ++t) {
          while (seg < r - 1 && t >= cuts[seg]) ++seg;
          const int i = pos_of[walk[t]];
          if (i < 0) continue;
          if (i % r != seg) return false;
          seen[seg].push_back(i);
        }
        for (int c = 0; c < r; ++c) {
          const auto& s = seen[c];
          const bool ok = c % 2 == 0 ? std::is_sorted(s.begin(), s.end())
                                     : std::is_sorted(s.rbegin(), s.rend());
          if (!ok) return false;
        }
        return true;
      }
      for (int c = from; c <= n; ++c) {
        cuts[j] = c;
        if (choose(j + 1, c)) return true;
      }
      return false;
    };
    if (choose(0, 0)) return true;
  }
  return false;
}

// Every ordered sequence of `len` distinct vertices, lexicographic.
inline void for_each_sequence(int n, int len, const std::function<bool(const std::vector<Vertex>&)>& f) {
  std::vector<Vertex> seq;
  std::vector<bool> used(n, false);
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(seq.size()) == len) return f(seq);
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      seq.push_back(v);
      const bool stop = rec();
      seq.pop_back();
      used[v] = false;
      if (stop) return true;
    }
    return false;
  };
  rec();
}

inline bool windows_are_edges(const Hypergraph& h, const std::vector<Vertex>& seq, int step) {
  const int r = h.r();
  for (std::size_t s = 0; s + r <= seq.size(); s += step) {
    tightpath::VertexMask m = 0;
    for (int q = 0; q < r; ++q) m |= tightpath::vertex_bit(seq[s + q]);
    if (!h.contains(m)) return false;
  }
  return true;
}

inline bool has_tight_path(const Hypergraph& h, int k) {
  const int len = k + h.r() - 1;
  if (len > h.n()) return false;
  bool found = false;
  for_each_sequence(h.n(), len, [&](const std::vector<Vertex>& s) {
    return found = windows_are_edges(h, s, 1);
  });
  return found;
}

inline bool has_zigzag(const Hypergraph& h, int k) {
  const int len = k + h.r() - 1;
  if (len > h.n()) return false;
  bool found = false;
  for_each_sequence(h.n(), len, [&](const std::vector<Vertex>& s) {
    return found = windows_are_edges(h, s, 1) && zigzag_by_segments(h.n(), s, h.r());
  });
  return found;
}

// All vertex sets of size r-1 covered by an edge, computed with std::set.
inline std::set<std::vector<Vertex>> shadow_sets(const Hypergraph& h) {
  std::set<std::vector<Vertex>> out;
  for (const Edge& e : h.edges()) {
    const auto vs = e.vertices();
    for (std::size_t skip = 0; skip < vs.size(); ++skip) {
      std::vector<Vertex> s;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i != skip) s.push_back(vs[i]);
      }
      out.insert(s);
    }
  }
  return out;
}

// Maximum family of r-sets on n points with no copy of the pattern, by
// plain subset enumeration. Only for C(n, r) <= ~20.
inline int brute_extremal(int n, int r, const std::function<bool(const Hypergraph&)>& has_pattern,
                          bool geometric) {
  std::vector<std::vector<Vertex>> all;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - r, pick.end(), 1);
  do {
    std::vector<Vertex> e;
    for (int v = 0; v < n; ++v) {
      if (pick[v]) e.push_back(v);
    }
    all.push_back(e);
  } while (std::next_permutation(pick.begin(), pick.end()));
  const int m = static_cast<int>(all.size());
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    const int c = std::popcount(s);
    if (c <= best) continue;
    std::vector<std::vector<Vertex>> chosen;
    for (int i = 0; i < m; ++i) {
      if ((s >> i) & 1U) chosen.push_back(all[i]);
    }
    if (!has_pattern(Hypergraph::from_lists(n, r, geometric, chosen))) best = c;
  }
  return best;
}

inline int arc(int n, int u, int v) {
  const int d = u > v ? u - v : v - u;
  return std::min(d, n - d);
}

// Membership test for the stack-free family written straight from rules
// (i)-(iii), over ascending tuples.
inline bool stack_free_member(int n, int r, int k, const std::vector<int>& v) {
  if (v[0] == 0) return true;
  for (int h = 0; h < r; ++h) {
    const int j = arc(n, v[h], v[(h + 1) % r]);
    if (1 <= j && j <= k - 2) return true;
  }
  if (k >= 2) {
    for (int h = 1; h <= r / 2 - 1; ++h) {
      const int j = arc(n, v[2 * h - 1], v[2 * h]);
      if (j == k - 1 || j == k) return true;
    }
  }
  return false;
}

inline std::set<std::vector<int>> stack_free_filter(int n, int r, int k) {
  std::set<std::vector<int>> out;
  std::vector<int> v(r);
  std::function<void(int, int)> rec = [&](int i, int from) {
    if (i == r) {
      if (stack_free_member(n, r, k, v)) out.insert(v);
      return;
    }
    for (int x = from; x < n; ++x) {
      v[i] = x;
      rec(i + 1, x + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace oracle
