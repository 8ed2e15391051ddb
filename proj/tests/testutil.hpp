#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "spansub/graph.hpp"

namespace testutil {

inline spansub::Graph complete_graph(int n) {
  spansub::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline spansub::Graph path_graph(int n) {
  spansub::Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline spansub::Graph cycle_graph(int n) {
  spansub::Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline spansub::Digraph directed_cycle(int n) {
  spansub::Digraph d(n);
  for (int v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
  return d;
}

inline spansub::Digraph directed_path(int n) {
  spansub::Digraph d(n);
  for (int v = 0; v + 1 < n; ++v) d.add_arc(v, v + 1);
  return d;
}

inline spansub::Digraph biorientation(const spansub::Graph& g) {
  spansub::Digraph d(g.n);
  for (const spansub::Graph::Edge& e : g.edges) {
    d.add_arc(e.u, e.v);
    d.add_arc(e.v, e.u);
  }
  return d;
}

inline spansub::Graph petersen() {
  spansub::Graph g(10);
  for (int v = 0; v < 5; ++v) {
    g.add_edge(v, (v + 1) % 5);      // outer cycle
    g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    g.add_edge(v, 5 + v);            // spokes
  }
  return g;
}

// Independent max-flow oracle: naive Ford-Fulkerson with DFS augmentation,
// deliberately a different route than the library's BFS scheme.
struct NaiveFlow {
  int n;
  std::vector<std::vector<int>> cap;

  explicit NaiveFlow(int vertices) : n(vertices), cap(vertices, std::vector<int>(vertices, 0)) {}

  void arc(int u, int v, int c) { cap[u][v] += c; }

  int dfs(int v, int t, int pushed, std::vector<char>& seen) {
    if (v == t) return pushed;
    seen[v] = 1;
    for (int w = 0; w < n; ++w) {
      if (seen[w] || cap[v][w] <= 0) continue;
      int got = dfs(w, t, std::min(pushed, cap[v][w]), seen);
      if (got > 0) {
        cap[v][w] -= got;
        cap[w][v] += got;
        return got;
      }
    }
    return 0;
  }

  int max_flow(int s, int t) {
    int total = 0;
    while (true) {
      std::vector<char> seen(n, 0);
      int got = dfs(s, t, 1 << 28, seen);
      if (got == 0) break;
      total += got;
    }
    return total;
  }
};

inline long long naive_lambda_pair(const spansub::Graph& g, int u, int v) {
  NaiveFlow flow(g.n);
  for (const spansub::Graph::Edge& e : g.edges) {
    flow.arc(e.u, e.v, 1);
    flow.arc(e.v, e.u, 1);
  }
  return flow.max_flow(u, v);
}

inline long long naive_lambda_pair(const spansub::Digraph& d, int u, int v) {
  NaiveFlow flow(d.n);
  for (const spansub::Digraph::Arc& a : d.arcs) flow.arc(a.tail, a.head, 1);
  return flow.max_flow(u, v);
}

template <typename G>
long long naive_global_lambda(const G& g) {
  long long best = 1 << 28;
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (u != v) best = std::min(best, naive_lambda_pair(g, u, v));
  return best;
}

// Removing the witness edges must disconnect u from v (directed: kill all
// u->v paths).
inline bool cut_separates(const spansub::Graph& g, const std::vector<int>& crossing, int u, int v) {
  std::vector<char> removed(g.edge_count(), 0);
  for (int id : crossing) removed[id] = 1;
  auto adj = g.adjacency();
  std::vector<char> seen(g.n, 0);
  std::queue<int> q;
  q.push(u);
  seen[u] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (auto [y, id] : adj[x])
      if (!removed[id] && !seen[y]) {
        seen[y] = 1;
        q.push(y);
      }
  }
  return !seen[v];
}

inline bool cut_separates(const spansub::Digraph& d, const std::vector<int>& crossing, int u,
                          int v) {
  std::vector<char> removed(d.arc_count(), 0);
  for (int id : crossing) removed[id] = 1;
  auto adj = d.out_adjacency();
  std::vector<char> seen(d.n, 0);
  std::queue<int> q;
  q.push(u);
  seen[u] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (auto [y, id] : adj[x])
      if (!removed[id] && !seen[y]) {
        seen[y] = 1;
        q.push(y);
      }
  }
  return !seen[v];
}

}  // namespace testutil
