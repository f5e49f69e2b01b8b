#pragma once

// Explicit pattern-free families.

#include <vector>

#include "core.hpp"

namespace tightpath {

// Parts H_0..H_{k-1} of the stack-free construction, edges read as ascending
// tuples (v_0 < ... < v_{r-1}):
//   H_0      edges through vertex 0;
//   H_j      edges avoiding 0 with arc_length(v_h, v_{h+1}) = j for some h in
//            0..r-1, v_r read as v_0            (1 <= j <= k-2);
//   H_{k-1}  edges avoiding 0 with arc_length(v_{2h-1}, v_{2h}) in {k-1, k}
//            for some h in 1..r/2-1             (k >= 2).
// Parts j >= 1 may overlap one another; none meets H_0.
std::vector<Hypergraph> stack_free_parts(int n, int r, int k);

// Union of stack_free_parts. Contains no k-stack.
Hypergraph stack_free(int n, int r, int k);

// Edges with some pair at arc length <= k-1; odd k >= 3. No k-stack.
Hypergraph short_side(int n, int r, int k);

// Cliques of order k on consecutive arcs; the last clique is smaller when
// k does not divide n.
Hypergraph clique_union(int n, int k);

// Transversal block construction on s = r/2 blocks of n/s consecutive
// vertices; needs s | n, r | k-1 and a = (k-1)/r < n/s.
std::vector<Hypergraph> transversal_parts(int n, int r, int k);
Hypergraph transversal_blocks(int n, int r, int k);

// {x} + e for every fresh vertex x in {n..n+m-1} and every edge e.
Hypergraph lift_plus(const Hypergraph& h, int m);

// ceil((ell + r) / (r + 1)).
int phi(int ell, int r);

}  // namespace tightpath
