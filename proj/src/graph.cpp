#include "spansub/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace spansub {

bool Graph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert({key.first, key.second}).second) return false;
  }
  return true;
}

bool Graph::operator==(const Graph& other) const {
  if (n != other.n || edges.size() != other.edges.size()) return false;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].u != other.edges[i].u || edges[i].v != other.edges[i].v) return false;
  return true;
}

bool Digraph::operator==(const Digraph& other) const {
  if (n != other.n || arcs.size() != other.arcs.size()) return false;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (arcs[i].tail != other.arcs[i].tail || arcs[i].head != other.arcs[i].head) return false;
  return true;
}

Partition::Partition(std::vector<int> assignment, int parts)
    : part_of(std::move(assignment)), part_count(parts) {
  require(parts >= 1, ErrKind::BadParameters, "partition needs at least one part");
  for (int p : part_of)
    require(0 <= p && p < parts, ErrKind::BadParameters, "part index out of range");
}

Partition Partition::round_robin(int n, int parts) {
  std::vector<int> a(n);
  for (int v = 0; v < n; ++v) a[v] = v % parts;
  return Partition(std::move(a), parts);
}

Partition Partition::singletons(int n) {
  std::vector<int> a(n);
  for (int v = 0; v < n; ++v) a[v] = v;
  return Partition(std::move(a), std::max(1, n));
}

Graph partite_subgraph(const Graph& g, const Partition& p) {
  p.check_covers(g.n);
  Graph h(g.n);
  for (const Graph::Edge& e : g.edges)
    if (p.part_of[e.u] != p.part_of[e.v]) h.add_edge(e.u, e.v);
  return h;
}

Digraph partite_subgraph(const Digraph& d, const Partition& p) {
  p.check_covers(d.n);
  Digraph h(d.n);
  for (const Digraph::Arc& a : d.arcs)
    if (p.part_of[a.tail] != p.part_of[a.head]) h.add_arc(a.tail, a.head);
  return h;
}

Graph underlying_graph(const Digraph& d) {
  std::set<std::pair<int, int>> pairs;
  for (const Digraph::Arc& a : d.arcs) {
    auto key = std::minmax(a.tail, a.head);
    pairs.insert({key.first, key.second});
  }
  Graph g(d.n);
  for (const auto& [u, v] : pairs) g.add_edge(u, v);
  return g;
}

Graph line_graph(const Graph& g) {
  require(g.is_simple(), ErrKind::MultigraphUnsupported, "line graph requires a simple graph");
  Graph l(g.edge_count());
  std::vector<std::vector<int>> incident(g.n);
  for (int id = 0; id < g.edge_count(); ++id) {
    incident[g.edges[id].u].push_back(id);
    incident[g.edges[id].v].push_back(id);
  }
  for (int v = 0; v < g.n; ++v)
    for (std::size_t i = 0; i < incident[v].size(); ++i)
      for (std::size_t j = i + 1; j < incident[v].size(); ++j)
        l.add_edge(incident[v][i], incident[v][j]);
  return l;
}

Graph cycle_power_graph(int r, int k) {
  require(r >= 3 && k >= 1 && k < r, ErrKind::BadParameters, "need r >= 3 and 1 <= k < r");
  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i < r; ++i)
    for (int j = 1; j <= k; ++j) {
      int w = (i + j) % r;
      auto key = std::minmax(i, w);
      pairs.insert({key.first, key.second});
    }
  Graph g(r);
  for (const auto& [u, v] : pairs) g.add_edge(u, v);
  return g;
}

Digraph cycle_power_digraph(int r, int k) {
  require(r >= 3 && k >= 1 && k < r, ErrKind::BadParameters, "need r >= 3 and 1 <= k < r");
  Digraph d(r);
  for (int i = 0; i < r; ++i)
    for (int j = 1; j <= k; ++j) d.add_arc(i, (i + j) % r);
  return d;
}

long long edges_between(const Graph& g, const std::vector<char>& in_x, const std::vector<char>& in_y) {
  long long count = 0;
  for (const Graph::Edge& e : g.edges) {
    if ((in_x[e.u] && in_y[e.v]) || (in_x[e.v] && in_y[e.u])) ++count;
  }
  return count;
}

long long crossing_out_degree(const Digraph& d, const Partition& p, int v) {
  p.check_covers(d.n);
  long long count = 0;
  for (const Digraph::Arc& a : d.arcs)
    if (a.tail == v && p.part_of[a.head] != p.part_of[v]) ++count;
  return count;
}

long long crossing_in_degree(const Digraph& d, const Partition& p, int v) {
  p.check_covers(d.n);
  long long count = 0;
  for (const Digraph::Arc& a : d.arcs)
    if (a.head == v && p.part_of[a.tail] != p.part_of[v]) ++count;
  return count;
}

bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  auto adj = g.adjacency();
  std::vector<char> seen(g.n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [w, id] : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == g.n;
}

}  // namespace spansub
