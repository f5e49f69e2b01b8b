#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"

namespace tightpath {

enum class PatternKind { tight_path, zigzag, stack, good_path };

std::string to_string(PatternKind kind);
PatternKind pattern_kind_from_string(const std::string& name);

struct PathWitness {
  PatternKind kind = PatternKind::tight_path;
  int k = 0;
  // For stacks this is the full kr-vertex zigzag sequence.
  std::vector<Vertex> sequence;
  std::vector<Edge> edges;
};

nlohmann::json to_json(const PathWitness& w);

// Assignment of every ground vertex to one of s blocks. Each block inherits
// the cyclic order of the ground set.
class BlockColoring {
 public:
  BlockColoring(int n, int s, std::vector<int> block_of);

  int n() const { return static_cast<int>(block_of_.size()); }
  int blocks() const { return s_; }
  int block(Vertex v) const;
  VertexMask members(int block) const { return members_.at(block); }

  // Clockwise walk from u to v inside the block holding both.
  std::vector<Vertex> segment(Vertex u, Vertex v) const;

  const std::vector<int>& assignment() const { return block_of_; }

 private:
  int s_;
  std::vector<int> block_of_;
  std::vector<VertexMask> members_;
};

// Block index h(j) = floor(j/2) mod s that position j of a good path uses.
inline int good_path_block(int position, int s) { return (position / 2) % s; }

// Zigzag order test: the clockwise order of the sequence's vertices must be
// a rotation of (class 0 ascending by index)(class 1 descending)... with
// classes taken mod r. Throws unsupported_pattern for odd r and domain errors
// for repeated or foreign vertices or a sequence shorter than r.
bool is_zigzag_sequence(const CyclicGround& ground, const std::vector<Vertex>& sequence, int r);

// Ordering test for good paths under a block coloring: every v_j lies in
// block h(j) and, inside each block i, the classes 2i (ascending) and 2i+1
// (descending) follow the block's cyclic order. Edge membership is not
// checked here.
bool is_good_path(const CyclicGround& ground, const std::vector<Vertex>& sequence,
                  const BlockColoring& coloring, int r);

// True iff every r-window of the sequence is an edge of h.
bool is_tight_path(const Hypergraph& h, const std::vector<Vertex>& sequence);

// First witness in DFS order (start vertex ascending, then next vertex id),
// or nullopt when h has no copy with exactly k pattern edges.
std::optional<PathWitness> find_pattern(const Hypergraph& h, PatternKind kind, int k);

// Throws unless (h, kind) is a supported combination.
void check_pattern_support(const Hypergraph& h, PatternKind kind);

}  // namespace tightpath
