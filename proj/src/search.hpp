#pragma once

// Exact extremal numbers by branch and bound over candidate edges.
//
// Candidate edges are the r-subsets of the ground in colex order. The DFS
// decides each edge in turn (include first, then skip). A branch is cut when
// the edge would complete the forbidden pattern, when even taking every
// remaining edge cannot beat the best count, or when the partial family is
// provably not the lexicographic leader of its orbit under the symmetry
// group. Leader cuts only discard families with an isomorphic copy that is
// searched elsewhere, so a completed run is exhaustive.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "patterns.hpp"

namespace tightpath {

enum class SymmetryGroup { cyclic, dihedral, symmetric };

std::string to_string(SymmetryGroup group);

// Vertex permutations of the group acting on {0..n-1}.
std::vector<std::vector<Vertex>> group_elements(SymmetryGroup group, int n);

// Lexicographically least relabeling of h under the group. The symmetric
// group is rejected for geometric hypergraphs.
Hypergraph canonical_form(const Hypergraph& h, SymmetryGroup group);

enum class Certificate { exhaustive, bounded };

std::string to_string(Certificate c);

struct SearchOptions {
  long long budget = 0;  // node limit; 0 means unlimited
  int threads = 1;
  int orbit_check_interval = 0;  // 0 picks 1 for symmetric, 3 otherwise
};

struct SearchResult {
  int n = 0;
  int r = 0;
  int k = 0;
  PatternKind pattern = PatternKind::tight_path;
  int value = 0;
  Hypergraph witness{1, 1, false};
  Certificate certificate = Certificate::exhaustive;
  long long nodes_explored = 0;
  double wall_seconds = 0;
  SymmetryGroup group = SymmetryGroup::symmetric;
};

// Supported up to 16 vertices and 64 candidate edges.
SearchResult exact_extremal(int n, int r, int k, PatternKind pattern, bool geometric,
                            const SearchOptions& options = {});

nlohmann::json to_json(const SearchResult& result);

struct FamilyCertificate {
  bool free = true;
  std::size_t edge_count = 0;
  std::optional<PathWitness> witness;
};

FamilyCertificate verify_family(const Hypergraph& h, PatternKind pattern, int k);

nlohmann::json to_json(const FamilyCertificate& cert);

}  // namespace tightpath
