#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spansub/graph.hpp"

namespace spansub {

// Minimum-cut certificate. side_x is a sorted non-empty proper vertex subset;
// crossing holds the edge/arc ids leaving it (in the directed case, the arcs
// with tail in side_x). value == crossing.size() always.
struct CutWitness {
  std::vector<int> side_x;
  long long value = 0;
  std::vector<int> crossing;
};

// Builds the cut determined by a vertex side: value and crossing ids are
// taken from the given graph.
CutWitness make_cut_witness(const Graph& g, const std::vector<int>& side_x);
CutWitness make_cut_witness(const Digraph& d, const std::vector<int>& side_x);

// lambda(u,v): maximum number of edge-disjoint (arc-disjoint) u->v paths,
// with a minimum separating cut as witness. Integral unit-capacity flow;
// no floating point anywhere in this module.
std::pair<long long, CutWitness> local_lambda(const Graph& g, int u, int v);
std::pair<long long, CutWitness> local_lambda(const Digraph& d, int u, int v);

// min(lambda(u,v), cap); cheap scan primitive, no witness.
long long local_lambda_capped(const Graph& g, int u, int v, long long cap);
long long local_lambda_capped(const Digraph& d, int u, int v, long long cap);

// Edge-/arc-connectivity with witness, by fixing vertex 0 and scanning flows
// to (and, for digraphs, from) every other vertex. The witness is the one
// produced by the first pair reaching the minimum, with the residual
// source side as its X.
std::pair<long long, CutWitness> global_lambda(const Graph& g);
std::pair<long long, CutWitness> global_lambda(const Digraph& d);

bool lambda_at_least(const Graph& g, long long k);
bool lambda_at_least(const Digraph& d, long long k);

// True iff lambda(x,y) >= k for all ordered pairs x,y distinct from the
// excluded vertex (cuts may still contain it on either side).
bool lambda_at_least_excluding(const Digraph& d, long long k, int excluded);

// Minimum of d_G(X) over subsets with at least two vertices on both sides.
// Exact via max-flow between every pair of disjoint contracted vertex pairs;
// O(n^4) flows, fine at desk scale.
std::pair<long long, std::optional<CutWitness>> essential_lambda(const Graph& g);

bool is_strong(const Digraph& d);

// Strongly connected components in a topological order of the condensation
// (sources first). Vertices inside each component are sorted.
std::vector<std::vector<int>> strong_components(const Digraph& d);

// Components with no arc leaving them.
std::vector<std::vector<int>> terminal_components(const Digraph& d);

// k-strong: at least k+1 vertices and D-X strong for every |X| < k.
// Checked by vertex-split Menger flows over non-adjacent ordered pairs.
bool is_k_strong(const Digraph& d, int k);

}  // namespace spansub
