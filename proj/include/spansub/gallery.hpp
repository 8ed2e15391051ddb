#pragma once

#include <string>
#include <vector>

#include "spansub/graph.hpp"

namespace spansub {

// Rotative tournament R_{2k+1}: out-neighbours of v_i are v_{i+1}..v_{i+k}.
Digraph rotative_tournament(int k);

// D_{k,r}: r copies of R_{2k+1} plus the k-th power of the r-cycle on the
// hub vertices v_{i,0}. Vertex (i,j) has id i*(2k+1)+j; validated to have
// arc-connectivity exactly k.
Digraph dkr(int k, int r);

// For a partition into at most 2k parts, returns a non-hub vertex of the
// first copy whose within-copy out- or in-neighbours outside its own part
// number fewer than k. Such a vertex cannot keep semi-degree k in any
// spanning subdigraph respecting the partition.
int dkr_refuter(int k, int r, const Partition& p);

// C3, C_{3,1}, T5, S_{5,1}, S_{5,2}, S_{5,3} with canonical labels
// (a..e or x..z mapped to 0..).
Digraph exceptional(const std::string& name);

const std::vector<std::string>& exceptional_names();

// Side table mapping the dense ids of a named construction back to its
// letter labels (a..e, or x,y,z for the 3-vertex ones).
std::vector<std::string> exceptional_labels(const std::string& name);

// Index maps for the four strata of the minimum out-degree 2k construction.
struct ClassDLayout {
  int k = 0;
  std::vector<int> v1, v2, v3, v4;
  std::vector<std::vector<int>> w_sets;                // k-subsets of v4
  std::vector<std::vector<int>> r_sets;                // R_W per W index
  std::vector<std::vector<std::vector<int>>> u_sets;   // [wi][ui] k-subset of R_W
  std::vector<std::vector<std::vector<int>>> s_sets;   // S_{W,U}
  std::vector<std::vector<std::vector<int>>> t_sets;   // T_{W,U}
};

struct ClassDResult {
  Digraph digraph;
  ClassDLayout layout;
};

// 2k-strong digraph with min out-degree 2k admitting no spanning 3-partite
// subdigraph of min semi-degree k+1. k >= 2 (k = 1 would need parallel arcs
// to reach 2k distinct in-neighbours).
ClassDResult class_d(int k);

// For a partition into at most 3 parts, replays the impossibility argument
// and returns a vertex with at most k out- or in-neighbours outside its part.
int class_d_refuter(const ClassDLayout& layout, const Partition& p);

// (3,5)-regular bipartite essentially 6-edge-connected graph on n vertices,
// n divisible by 16. Building blocks are verified essentially 4-edge-
// connected before composing.
Graph essentially_6ec_bipartite(int n);

struct NoBip2TResult {
  Graph graph;
  long long triangles = 0;   // b: cliques from degree-3 vertices
  long long k5_cliques = 0;  // c: cliques from degree-5 vertices
  long long cut_bound = 0;   // 2b + 6c, the maximum possible cut
};

// Line graph of essentially_6ec_bipartite(n): 6-regular, 6-edge-connected,
// every bipartition cuts at most 2b+6c < 2|V|-2 edges, so no spanning
// bipartite 2T-subgraph exists.
NoBip2TResult no_bip2t_example(int n);

// r hamiltonian paths decomposing K_{2r} (zigzag construction), validated.
std::vector<std::vector<int>> walecki_paths(int r);

// Rim cycle of odd length m plus a hub; a 2T-graph with chromatic number 4.
Graph odd_wheel(int m);

// Joins a kT host graph by k bridge edges to a fresh K_{2k}; the result is
// again a kT-graph and has chromatic number 2k.
Graph kt_chromatic_2k(int k, const Graph& host);

}  // namespace spansub
