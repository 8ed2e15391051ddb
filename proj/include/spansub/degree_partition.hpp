#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spansub/graph.hpp"

namespace spansub {

using Rational = boost::multiprecision::cpp_rational;

// Square nonnegative matrix with zero diagonal and row sums at most 1,
// together with positive part weights summing to 1. All entries exact.
struct WeightMatrix {
  int n = 0;
  std::vector<std::vector<Rational>> entries;
  std::vector<Rational> weights;

  WeightMatrix() = default;
  WeightMatrix(std::vector<std::vector<Rational>> a, std::vector<Rational> c);

  int parts() const { return static_cast<int>(weights.size()); }
};

// First (part, row) violating sum_{j in S_r} a_ij <= 2 c_r, in exact
// arithmetic; nullopt when the partition satisfies the lemma's bound.
std::optional<std::pair<int, int>> alon_violation(const WeightMatrix& m, const Partition& p);

// Partition of [n] into parts() classes with all within-part row sums at
// most twice the part weight. Existence is guaranteed by the matrix
// invariants; the search (potential descent, violation kicks, restarts,
// small-n exhaustion) validates its output exactly and reports
// BudgetExhausted on failure, never nonexistence.
Partition alon_partition(const WeightMatrix& m, long long budget = -1, std::uint64_t seed = 0);

// Two greedy passes (forward then reverse vertex order); at most half of
// each vertex's out-neighbours keep its colour. Colours in {0,1,2,3}.
std::vector<int> majority_4_colouring(const Digraph& d);

struct DegreePartitionResult {
  Partition partition;
  Digraph subdigraph;
};

// Spanning 3-partite subdigraph keeping ceil(d+/3) out-arcs at every vertex
// of X and ceil(d-/3) in-arcs at every vertex of Y; (X,Y) partitions V.
DegreePartitionResult three_partition_out_in(const Digraph& d, const std::vector<int>& x_side,
                                             const std::vector<int>& y_side,
                                             long long budget = -1, std::uint64_t seed = 0);

// Spanning k-partite subdigraph with d0_H(v) >= (k-4)/k * d0_D(v), k >= 5.
DegreePartitionResult kpartite_semidegree(const Digraph& d, int k, long long budget = -1,
                                          std::uint64_t seed = 0);

struct MinDegDecision {
  bool possible = false;
  std::vector<int> offending_component;  // k-regular tournament when impossible
};

// A digraph with min out-degree >= k has a spanning 2k-partite subdigraph
// with min out-degree >= k iff no terminal strong component is a k-regular
// tournament; decision with certificate, no construction.
MinDegDecision decide_2k_partite_mindeg(const Digraph& d, int k);

}  // namespace spansub
