#pragma once

#include <vector>

#include "spansub/cut_improver.hpp"
#include "spansub/graph.hpp"

namespace spansub {

// k pairwise edge-disjoint spanning trees, each a set of edge ids of the
// host graph (sorted).
struct TreePacking {
  std::vector<std::vector<int>> trees;
};

// Incremental matroid-union augmentation over k forests. Succeeds whenever a
// packing exists (in particular when lambda(g) >= 2k); otherwise throws
// NoPackingError carrying a vertex partition with fewer than k(s-1) crossing
// edges, the Tutte/Nash-Williams obstruction.
TreePacking tree_pack(const Graph& g, int k);

// Validates that packing.trees are pairwise disjoint spanning trees of g.
bool validate_packing(const Graph& g, const TreePacking& packing, int k);

struct Bipartite2TResult {
  Partition partition;
  Graph subgraph;
  TreePacking packing;
};

// lambda(g) >= 7 pipeline: bipartite subgraph with lambda >= 4, then two
// disjoint spanning trees inside it. force skips the precondition check.
Bipartite2TResult bipartite_2t(const Graph& g, bool force = false, std::uint64_t seed = 0);

struct KPartiteKTResult {
  Partition partition;
  Graph subgraph;
  TreePacking packing;
};

// lambda(g) >= 2k+1 pipeline: (k+1)-partite subgraph with lambda >= 2k, then
// k disjoint spanning trees.
KPartiteKTResult kpartite_kt(const Graph& g, int k, bool force = false, std::uint64_t seed = 0);

// Greedy colouring along a minimum-degree peeling order; returns the number
// of colours used. 2T-graphs are 3-degenerate, so they take at most 4.
int degeneracy_colouring(const Graph& g, std::vector<int>& colour_out);

}  // namespace spansub
