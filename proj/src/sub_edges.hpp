#pragma once

#include <unordered_set>

#include "core.hpp"

namespace tightpath {

// Every subset of every edge, for pruning partially filled windows.
class SubEdgeIndex {
 public:
  explicit SubEdgeIndex(const Hypergraph& h) {
    subsets_.insert(0);
    for (const Edge& e : h.edges()) {
      const VertexMask full = e.mask();
      // Walk all submasks of the edge.
      for (VertexMask sub = full;; sub = (sub - 1) & full) {
        subsets_.insert(sub);
        if (sub == 0) break;
      }
    }
  }

  bool contains(VertexMask m) const { return subsets_.contains(m); }

 private:
  std::unordered_set<VertexMask> subsets_;
};

// Adapts a Hypergraph to the SequenceFiller host interface.
struct HypergraphHost {
  const Hypergraph& h;
  SubEdgeIndex sub;

  explicit HypergraphHost(const Hypergraph& g) : h(g), sub(g) {}
  bool is_edge(VertexMask m) const { return h.contains(m); }
  bool within_edge(VertexMask m) const { return sub.contains(m); }
};

}  // namespace tightpath
