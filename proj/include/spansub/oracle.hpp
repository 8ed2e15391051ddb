#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spansub/graph.hpp"

namespace spansub {

// Result of an exhaustive search. verdict "exhausted-none" is only reported
// after the full declared space was enumerated; `examined` is the number of
// candidates actually tested.
struct SearchReport {
  bool found = false;
  std::optional<Partition> certificate;
  long long examined = 0;
};

// Enumerate all 2^(n-1) bipartitions (vertex 0 pinned to part 0); found iff
// some D[V1,V2] is strong.
SearchReport exists_strong_bipartite(const Digraph& d, int n_cap = 24);

// Bipartitions where D<V1>, D<V2> and D[V1,V2] are all strong.
SearchReport exists_three_strong_bipartition(const Digraph& d, int n_cap = 20);

int chromatic_number(const Graph& g, int n_cap = 20);

std::pair<Partition, long long> exact_max_kcut(const Graph& g, int k, int n_cap = 16);

enum class DegreePredicate { MinSemiDegree, MinOutDegree, Majority };

// Enumerate all partitions into at most t parts (canonical restricted-growth
// form) and test the predicate on the crossing subdigraph. For the degree
// predicates `bound` is the required minimum; Majority ignores it.
SearchReport exists_partition_with(const Digraph& d, int t, DegreePredicate pred, long long bound,
                                   int n_cap = 12);

Digraph induced_subdigraph(const Digraph& d, const std::vector<int>& vertices);

bool majority_colouring_valid(const Digraph& d, const std::vector<int>& colour);

}  // namespace spansub
