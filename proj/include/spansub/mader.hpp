#pragma once

#include <utility>
#include <vector>

#include "spansub/connectivity.hpp"
#include "spansub/graph.hpp"

namespace spansub {

// One splitting-off step: at the balanced vertex s, in-arc (u_i, s) was
// paired with out-arc (s, v_i) and both replaced by u_i -> v_i. Replaying a
// stack of records bottom-up reconstructs the original arc multiset.
struct SplitRecord {
  int vertex = 0;
  std::vector<std::pair<int, int>> pairs;        // (u_i, v_i)
  std::vector<int> created_arcs;                 // ids of u_i -> v_i in the reduced digraph
};

using SplitTrace = std::vector<SplitRecord>;

// Deletes arcs in ascending id order while lambda stays >= k; the result is
// minimally k-arc-connected.
Digraph minimize_arcs(const Digraph& d, int k);

// Smallest-id vertex with in-degree = out-degree = k; exists in every
// minimally k-arc-connected digraph.
int find_low_vertex(const Digraph& d, int k);

struct SplitResult {
  Digraph reduced;                 // without vertex s; ids above s shifted down by one
  SplitRecord record;              // pairs and created arc ids (in `reduced`)
};

// Complete admissible splitting at s: every in-arc paired with an out-arc so
// that all local connectivities among the other vertices stay >= k. Greedy
// over arc-id order with backtracking; the pairing exists whenever
// d^-(s) = d^+(s) and lambda(d) >= k. With fast=true the per-pair
// admissibility checks are skipped and only complete pairings are tested,
// backtracking on failure.
SplitResult split_off(const Digraph& d, int s, int k, bool fast = false);

struct KacPartiteResult {
  Partition partition;
  Digraph subdigraph;
  SplitTrace trace;
};

// Spanning k-arc-connected subdigraph with at most 2k+1 parts, by the
// minimize / split-off / recurse / lift scheme. Parts are independent in the
// returned subdigraph, which is verified to be a sub-multidigraph of d with
// lambda >= k before returning.
KacPartiteResult spanning_kac_partite(const Digraph& d, int k, bool fast = false);

// Keeps one arc per ordered vertex pair.
Digraph collapse_parallel_arcs(const Digraph& d);

// Multiset inclusion of arcs (by endpoints).
bool arc_multiset_subset(const Digraph& sub, const Digraph& host);

}  // namespace spansub
