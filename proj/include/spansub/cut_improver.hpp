#pragma once

#include <vector>

#include "spansub/connectivity.hpp"
#include "spansub/graph.hpp"

namespace spansub {

// Decomposition of a cut d_G(X) along the k cyclic shifts: scores[l] sums
// d_G(X_i, Y_{i+l mod k}) where X_i, Y_i split part i by the witness side.
// scores[0] counts within-part contributions; the scores always sum to the
// witness value.
struct ShiftScores {
  std::vector<long long> scores;
  std::vector<std::vector<int>> x_sets;
  std::vector<std::vector<int>> y_sets;
};

ShiftScores shift_scores(const Graph& g, const Partition& p, const CutWitness& witness);

// New partition with part i = X_i union Y_{i+q mod k}; crossing count grows
// by scores[0] - scores[q] when that is positive. 1 <= q <= k-1.
Partition apply_shift(const Partition& p, const CutWitness& witness, int q);

struct KPartiteEcResult {
  Partition partition;
  Graph subgraph;
  int iterations = 0;
};

struct EcTraceStep {
  CutWitness witness;
  std::vector<long long> scores;
  int chosen_q = 0;
};

// Spanning k-partite subgraph H with lambda(H) >= ceil((k-1)/k * lambda(G)),
// by cyclic-shift improvement on min-cut witnesses. Starts from round-robin
// by vertex id; a nonzero seed shuffles the vertex order first. At most |E|
// improvement steps; the bound is re-verified before returning.
KPartiteEcResult spanning_kpartite_ec(const Graph& g, int k, std::uint64_t seed = 0,
                                      std::vector<EcTraceStep>* trace = nullptr);

inline long long kpartite_ec_target(long long lambda_g, int k) {
  return ((k - 1) * lambda_g + k - 1) / k;
}

}  // namespace spansub
