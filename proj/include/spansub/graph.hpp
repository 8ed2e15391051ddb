#pragma once

#include <string>
#include <vector>

#include "spansub/error.hpp"

namespace spansub {

// Undirected multigraph. Edge ids are positions in `edges`; loops are
// forbidden, parallel edges allowed. Value type, immutable by convention
// once built, so concurrent reads are safe.
struct Graph {
  struct Edge {
    int u = 0;
    int v = 0;
  };

  int n = 0;
  std::vector<Edge> edges;

  Graph() = default;
  explicit Graph(int vertex_count) : n(vertex_count) {
    require(vertex_count >= 0, ErrKind::BadParameters, "negative vertex count");
  }

  int add_edge(int u, int v) {
    require(0 <= u && u < n && 0 <= v && v < n, ErrKind::BadParameters, "endpoint out of range");
    require(u != v, ErrKind::BadParameters, "loops are forbidden");
    edges.push_back({u, v});
    return static_cast<int>(edges.size()) - 1;
  }

  int edge_count() const { return static_cast<int>(edges.size()); }

  std::vector<int> degrees() const {
    std::vector<int> d(n, 0);
    for (const Edge& e : edges) {
      ++d[e.u];
      ++d[e.v];
    }
    return d;
  }

  // adjacency()[v] lists (neighbour, edge id) in edge-id order.
  std::vector<std::vector<std::pair<int, int>>> adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int id = 0; id < edge_count(); ++id) {
      adj[edges[id].u].push_back({edges[id].v, id});
      adj[edges[id].v].push_back({edges[id].u, id});
    }
    return adj;
  }

  bool is_simple() const;

  bool operator==(const Graph& other) const;
};

// Directed multigraph with the same id conventions as Graph.
struct Digraph {
  struct Arc {
    int tail = 0;
    int head = 0;
  };

  int n = 0;
  std::vector<Arc> arcs;

  Digraph() = default;
  explicit Digraph(int vertex_count) : n(vertex_count) {
    require(vertex_count >= 0, ErrKind::BadParameters, "negative vertex count");
  }

  int add_arc(int tail, int head) {
    require(0 <= tail && tail < n && 0 <= head && head < n, ErrKind::BadParameters,
            "endpoint out of range");
    require(tail != head, ErrKind::BadParameters, "loops are forbidden");
    arcs.push_back({tail, head});
    return static_cast<int>(arcs.size()) - 1;
  }

  int arc_count() const { return static_cast<int>(arcs.size()); }

  std::vector<int> out_degrees() const {
    std::vector<int> d(n, 0);
    for (const Arc& a : arcs) ++d[a.tail];
    return d;
  }

  std::vector<int> in_degrees() const {
    std::vector<int> d(n, 0);
    for (const Arc& a : arcs) ++d[a.head];
    return d;
  }

  // out_adjacency()[v] lists (head, arc id) in arc-id order.
  std::vector<std::vector<std::pair<int, int>>> out_adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int id = 0; id < arc_count(); ++id) adj[arcs[id].tail].push_back({arcs[id].head, id});
    return adj;
  }

  std::vector<std::vector<std::pair<int, int>>> in_adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int id = 0; id < arc_count(); ++id) adj[arcs[id].head].push_back({arcs[id].tail, id});
    return adj;
  }

  bool has_arc(int tail, int head) const {
    for (const Arc& a : arcs)
      if (a.tail == tail && a.head == head) return true;
    return false;
  }

  Digraph reversed() const {
    Digraph r(n);
    for (const Arc& a : arcs) r.add_arc(a.head, a.tail);
    return r;
  }

  bool operator==(const Digraph& other) const;
};

// Vertex -> part index map. Parts may be empty; part_count only bounds the
// indices from above.
struct Partition {
  std::vector<int> part_of;
  int part_count = 1;

  Partition() = default;
  Partition(std::vector<int> assignment, int parts);

  int size() const { return static_cast<int>(part_of.size()); }

  void check_covers(int n) const {
    require(size() == n, ErrKind::PartitionMismatch, "partition and graph disagree on vertex count");
  }

  std::vector<std::vector<int>> groups() const {
    std::vector<std::vector<int>> g(part_count);
    for (int v = 0; v < size(); ++v) g[part_of[v]].push_back(v);
    return g;
  }

  static Partition round_robin(int n, int parts);
  static Partition singletons(int n);
};

Graph partite_subgraph(const Graph& g, const Partition& p);
Digraph partite_subgraph(const Digraph& d, const Partition& p);

Graph underlying_graph(const Digraph& d);

// One vertex per edge of a simple g, adjacent when the edges share an endpoint.
Graph line_graph(const Graph& g);

// Vertex i gets edges/arcs to i+1..i+k (mod r).
Graph cycle_power_graph(int r, int k);
Digraph cycle_power_digraph(int r, int k);

// Number of g-edges with one endpoint in xs and the other in ys (multiplicity
// counted). The sets must be disjoint.
long long edges_between(const Graph& g, const std::vector<char>& in_x, const std::vector<char>& in_y);

bool is_connected(const Graph& g);

// Out-/in-neighbour counts of v landing outside its own part.
long long crossing_out_degree(const Digraph& d, const Partition& p, int v);
long long crossing_in_degree(const Digraph& d, const Partition& p, int v);

}  // namespace spansub
