#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spansub/connectivity.hpp"
#include "spansub/graph.hpp"

namespace spansub {

bool is_semicomplete(const Digraph& d);
bool is_tournament(const Digraph& d);

// Vertex sequence visiting every vertex once, consecutive pairs (cyclically)
// being arcs.
using HamCycle = std::vector<int>;

bool validate_ham_cycle(const Digraph& d, const HamCycle& cycle,
                        const std::vector<std::pair<int, int>>* forbidden = nullptr);

// Hamiltonian cycle of a strong semicomplete digraph: insertion into a
// hamiltonian path, then cycle absorption. Quadratic-ish, deterministic.
HamCycle hamiltonian_cycle(const Digraph& d);

// Vertex z with t - z strong and minimal semi-degree, smallest id on ties.
int removable_vertex(const Digraph& t);

// Hamiltonian cycle using none of the forbidden arcs. The input must be
// (|forbidden|+1)-strong, which guarantees existence; the search itself is
// a heuristic plus bounded backtracking, so running out of budget reports
// a search failure, never nonexistence.
HamCycle hamiltonian_cycle_avoiding(const Digraph& t,
                                    const std::vector<std::pair<int, int>>& forbidden,
                                    long long budget = 1000000);

// Bipartition (V1,V2) of a strong tournament with T[V1,V2] strong; throws
// ExceptionalError for C3 and T5, the only strong tournaments without one.
Partition good_bipartition_tournament(const Digraph& t);

// Same for strong semicomplete digraphs; the six digraphs of
// exceptional_names() are the only ones refused.
Partition strong_bipartite_semicomplete(const Digraph& s);

// Brute-force isomorphism (n <= 8 guard): vertex map from -> to.
std::optional<std::vector<int>> find_isomorphism(const Digraph& from, const Digraph& to);

// Name of the exceptional digraph s is isomorphic to, if any.
std::optional<std::string> is_exceptional(const Digraph& s);

}  // namespace spansub
