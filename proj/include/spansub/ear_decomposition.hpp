#pragma once

#include <optional>
#include <vector>

#include "spansub/connectivity.hpp"
#include "spansub/graph.hpp"

namespace spansub {

// One ear: arc ids in traversal order plus the visited vertex sequence
// (vertices.size() == arcs.size() + 1; for the initial cycle and for cycle
// ears the first and last vertex coincide).
struct Ear {
  std::vector<int> arcs;
  std::vector<int> vertices;
  bool trivial() const { return arcs.size() == 1; }
};

struct EarDecomposition {
  std::vector<Ear> ears;
};

// Complete ear decomposition of a strong digraph on >= 2 vertices, starting
// from the given cycle (vertex sequence without the closing repeat) or from
// a shortest cycle found by BFS. Non-trivial ears are added shortest first
// until all vertices are covered; the remaining arcs become trivial ears.
EarDecomposition ear_decomposition(const Digraph& d,
                                   const std::optional<std::vector<int>>& start_cycle = std::nullopt);

// Replays the ears and checks conditions (a)-(c) against the host digraph.
bool validate_ear_decomposition(const Digraph& d, const EarDecomposition& ed);

struct Strong3PartiteResult {
  Partition partition;
  Digraph subdigraph;
};

// Spanning strong subdigraph built from shortest non-trivial ears; its
// underlying graph is 2-degenerate, so 3 colours suffice and every arc
// crosses the returned partition.
Strong3PartiteResult strong_3partite(const Digraph& d);

}  // namespace spansub
