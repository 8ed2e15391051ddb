#pragma once

#include "spansub/graph.hpp"
#include "spansub/rng.hpp"

namespace spansub {

// Seeded generators for experiments and the acceptance battery. All are
// deterministic functions of their Rng.

// Connected simple graph: random spanning tree plus extra distinct edges up
// to m (capped at the complete graph).
Graph random_connected_graph(Rng& rng, int n, int m);

// Simple graph, possibly disconnected.
Graph random_graph(Rng& rng, int n, int m);

// lambda >= k: circulant power base (vertex-transitive, edge-connectivity
// equal to its degree) plus random extra edges, relabelled.
Graph random_edge_connected_graph(Rng& rng, int n, int k, int extra);

// Simple digraph, possibly not strong.
Digraph random_digraph(Rng& rng, int n, int m);

// Hamiltonian cycle on a random vertex order plus extra arcs.
Digraph random_strong_digraph(Rng& rng, int n, int m);

// Directed circulant power base (arc-connectivity k) plus random extra arcs.
Digraph random_arc_connected_digraph(Rng& rng, int n, int k, int extra);

Digraph random_tournament(Rng& rng, int n);

// Random tournament with extra 2-cycle arcs, resampled until strong.
Digraph random_strong_semicomplete(Rng& rng, int n, int two_cycles);

// Adds arcs to random new heads/tails until every semi-degree reaches the
// bound.
Digraph pad_min_semidegree(Rng& rng, Digraph d, int bound);
Digraph pad_min_outdegree(Rng& rng, Digraph d, int bound);

Partition random_partition(Rng& rng, int n, int parts);

}  // namespace spansub
