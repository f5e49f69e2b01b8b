#pragma once

// Backtracking filler for vertex sequences with edge windows.
//
// A FillPlan describes a sequence of `length` positions. Every window start w
// in `windows` requires positions w..w+r-1 to form an edge of the host. Each
// cyclic group lists positions whose vertices must appear in that exact
// cyclic order around the circle (restricted to the filled positions), which
// is how zigzag and good-path orderings are imposed. Positions are filled in
// `order`; any positions absent from `order` are expected to be prefilled by
// the caller.
//
// The host is any type with
//   bool is_edge(VertexMask) const;
//   bool within_edge(VertexMask) const;   // subset of some edge
//
// Partial windows are pruned with within_edge, complete windows with
// is_edge, and cyclic groups after every placement.

#include <algorithm>
#include <vector>

#include "core.hpp"

namespace tightpath::detail {

// True iff the sequence, read cyclically, passes every vertex id in
// increasing order exactly once around the circle (at most one descent).
inline bool cyclically_monotone(const Vertex* vs, int count) {
  if (count <= 2) return true;
  int descents = vs[0] < vs[count - 1] ? 1 : 0;
  for (int i = 1; i < count; ++i) {
    if (vs[i] < vs[i - 1] && ++descents > 1) return false;
  }
  return true;
}

// Residue classes mod r concatenated: class 0 ascending by index, class 1
// descending, class 2 ascending and so on, for a sequence of `length`.
inline std::vector<int> zigzag_position_order(int length, int r) {
  std::vector<int> out;
  out.reserve(length);
  for (int c = 0; c < r; ++c) {
    std::vector<int> cls;
    for (int p = c; p < length; p += r) cls.push_back(p);
    if (c % 2 == 1) std::reverse(cls.begin(), cls.end());
    out.insert(out.end(), cls.begin(), cls.end());
  }
  return out;
}

struct FillPlan {
  int length = 0;
  int r = 0;
  std::vector<int> windows;
  std::vector<std::vector<int>> cyclic_groups;
  std::vector<VertexMask> allowed;  // per position; empty means unrestricted
  std::vector<int> order;

  // Derived by prepare().
  std::vector<std::vector<int>> complete_at;
  std::vector<std::vector<int>> partial_at;
  std::vector<std::vector<int>> groups_at;

  // `prefilled` marks positions the caller fills before run().
  void prepare(const std::vector<bool>& prefilled) {
    std::vector<bool> filled = prefilled;
    filled.resize(length, false);
    complete_at.assign(order.size(), {});
    partial_at.assign(order.size(), {});
    groups_at.assign(order.size(), {});
    for (std::size_t t = 0; t < order.size(); ++t) {
      const int p = order[t];
      filled[p] = true;
      for (std::size_t w = 0; w < windows.size(); ++w) {
        const int s = windows[w];
        if (p < s || p >= s + r) continue;
        bool all = true;
        for (int q = s; q < s + r; ++q) all = all && filled[q];
        (all ? complete_at : partial_at)[t].push_back(static_cast<int>(w));
      }
      for (std::size_t g = 0; g < cyclic_groups.size(); ++g) {
        const auto& grp = cyclic_groups[g];
        if (std::find(grp.begin(), grp.end(), p) != grp.end()) {
          groups_at[t].push_back(static_cast<int>(g));
        }
      }
    }
  }

  // Contiguous left-to-right fill.
  static std::vector<int> iota_order(int length) {
    std::vector<int> out(length);
    for (int i = 0; i < length; ++i) out[i] = i;
    return out;
  }
};

template <class Host, class Visit>
class SequenceFiller {
 public:
  SequenceFiller(const FillPlan& plan, const Host& host, int n, Visit& visit)
      : plan_(plan), host_(host), n_(n), visit_(visit), scratch_(plan.length) {}

  // Runs over all completions of `seq` (with -1 at unfilled positions).
  // Returns true when the visitor asked to stop.
  bool run(std::vector<Vertex>& seq) {
    VertexMask used = 0;
    for (Vertex v : seq) {
      if (v >= 0) used |= vertex_bit(v);
    }
    return descend(seq, used, 0);
  }

  long long placements() const { return placements_; }

 private:
  bool descend(std::vector<Vertex>& seq, VertexMask used, std::size_t step) {
    if (step == plan_.order.size()) return visit_(static_cast<const std::vector<Vertex>&>(seq));
    const int p = plan_.order[step];
    const VertexMask all = n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
    VertexMask candidates = all & ~used;
    if (!plan_.allowed.empty()) candidates &= plan_.allowed[p];
    for (; candidates; candidates &= candidates - 1) {
      const Vertex v = std::countr_zero(candidates);
      seq[p] = v;
      ++placements_;
      if (admissible(seq, step) && descend(seq, used | vertex_bit(v), step + 1)) {
        seq[p] = -1;
        return true;
      }
    }
    seq[p] = -1;
    return false;
  }

  VertexMask window_mask(const std::vector<Vertex>& seq, int start) const {
    VertexMask m = 0;
    for (int q = start; q < start + plan_.r; ++q) {
      if (seq[q] >= 0) m |= vertex_bit(seq[q]);
    }
    return m;
  }

  bool admissible(const std::vector<Vertex>& seq, std::size_t step) {
    for (int w : plan_.complete_at[step]) {
      if (!host_.is_edge(window_mask(seq, plan_.windows[w]))) return false;
    }
    for (int w : plan_.partial_at[step]) {
      if (!host_.within_edge(window_mask(seq, plan_.windows[w]))) return false;
    }
    for (int g : plan_.groups_at[step]) {
      int count = 0;
      for (int q : plan_.cyclic_groups[g]) {
        if (seq[q] >= 0) scratch_[count++] = seq[q];
      }
      if (!cyclically_monotone(scratch_.data(), count)) return false;
    }
    return true;
  }

  const FillPlan& plan_;
  const Host& host_;
  int n_;
  Visit& visit_;
  std::vector<Vertex> scratch_;
  long long placements_ = 0;
};

}  // namespace tightpath::detail
