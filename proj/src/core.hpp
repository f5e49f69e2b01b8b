#pragma once

// Ground set geometry and basic hypergraph algebra.
//
// Vertices are the ranks 0..n-1 around a circle, read clockwise. Only the
// cyclic order is ever used; there are no coordinates. Vertex sets are held
// as 64-bit masks, which caps the ground set at 64 points.

#include <bit>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "error.hpp"

namespace tightpath {

using Vertex = int;
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline VertexMask vertex_bit(Vertex v) { return VertexMask{1} << v; }

std::vector<Vertex> mask_vertices(VertexMask mask);
VertexMask vertices_mask(std::span<const Vertex> vertices);

class CyclicGround {
 public:
  explicit CyclicGround(int n);

  int size() const { return n_; }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }
  void check(Vertex v) const;

  Vertex next(Vertex v) const { return v + 1 == n_ ? 0 : v + 1; }
  Vertex prev(Vertex v) const { return v == 0 ? n_ - 1 : v - 1; }

  // Clockwise steps from u to v, in [0, n).
  int steps(Vertex u, Vertex v) const { return ((v - u) % n_ + n_) % n_; }

  // Clockwise walk from u to v, both endpoints included.
  std::vector<Vertex> segment(Vertex u, Vertex v) const;

  // Number of sides on the shorter of the two arcs between u and v.
  int arc_length(Vertex u, Vertex v) const;

  bool operator==(const CyclicGround&) const = default;

 private:
  int n_;
};

// An unordered vertex set. Ordered views of an edge (ends, witnesses) are
// separate sequences and never stored here.
class Edge {
 public:
  Edge() = default;
  explicit Edge(VertexMask mask) : mask_(mask) {}
  explicit Edge(std::span<const Vertex> vertices);
  Edge(std::initializer_list<Vertex> vertices);

  VertexMask mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool contains(Vertex v) const { return (mask_ >> v) & 1U; }
  std::vector<Vertex> vertices() const { return mask_vertices(mask_); }

  bool operator==(const Edge&) const = default;
  // Lexicographic on the ascending vertex lists.
  bool operator<(const Edge& other) const;

 private:
  VertexMask mask_ = 0;
};

class Hypergraph {
 public:
  // Duplicate edges collapse. Throws Error(domain) when an edge has the
  // wrong size or leaves the ground set.
  Hypergraph(int n, int r, bool geometric, std::vector<Edge> edges = {});

  static Hypergraph from_lists(int n, int r, bool geometric,
                               const std::vector<std::vector<Vertex>>& edges);

  const CyclicGround& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  int r() const { return r_; }
  bool geometric() const { return geometric_; }

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(VertexMask mask) const { return index_.contains(mask); }
  bool contains(const Edge& e) const { return contains(e.mask()); }

  std::size_t degree(Vertex v) const;

  Hypergraph with_geometry(bool geometric) const;

  bool operator==(const Hypergraph& other) const {
    return ground_ == other.ground_ && r_ == other.r_ && geometric_ == other.geometric_ &&
           edges_ == other.edges_;
  }

 private:
  CyclicGround ground_;
  int r_;
  bool geometric_;
  std::vector<Edge> edges_;
  std::unordered_set<VertexMask> index_;
};

// All (r-1)-sets obtained by deleting one vertex from an edge.
Hypergraph shadow(const Hypergraph& h);

// { e in shadow(h) : e + v in h }.
Hypergraph link(const Hypergraph& h, Vertex v);

Hypergraph edge_union(const Hypergraph& a, const Hypergraph& b);

long long binomial(int n, int k);

// All k-subsets of {0..n-1} in colex order.
std::vector<VertexMask> k_subsets(int n, int k);

}  // namespace tightpath
