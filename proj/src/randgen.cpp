#include "spansub/randgen.hpp"

#include <algorithm>
#include <set>

#include "spansub/connectivity.hpp"

namespace spansub {

namespace {

long long max_edges(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

}  // namespace

Graph random_connected_graph(Rng& rng, int n, int m) {
  require(n >= 1, ErrKind::BadParameters, "need at least one vertex");
  Graph g(n);
  std::set<std::pair<int, int>> present;
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  rng.shuffle(order);
  for (int i = 1; i < n; ++i) {
    int u = order[rng.below_int(i)], v = order[i];
    auto key = std::minmax(u, v);
    present.insert({key.first, key.second});
    g.add_edge(u, v);
  }
  long long want = std::min<long long>(m, max_edges(n));
  while (g.edge_count() < want) {
    int u = rng.below_int(n), v = rng.below_int(n);
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (!present.insert({key.first, key.second}).second) continue;
    g.add_edge(u, v);
  }
  return g;
}

Graph random_graph(Rng& rng, int n, int m) {
  require(n >= 1, ErrKind::BadParameters, "need at least one vertex");
  Graph g(n);
  std::set<std::pair<int, int>> present;
  long long want = std::min<long long>(m, max_edges(n));
  while (g.edge_count() < want) {
    int u = rng.below_int(n), v = rng.below_int(n);
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (!present.insert({key.first, key.second}).second) continue;
    g.add_edge(u, v);
  }
  return g;
}

Graph random_edge_connected_graph(Rng& rng, int n, int k, int extra) {
  int half = (k + 1) / 2;
  require(n >= 2 * half + 1, ErrKind::BadParameters, "n too small for the circulant base");
  Graph base = cycle_power_graph(n, half);
  std::vector<int> relabel(n);
  for (int v = 0; v < n; ++v) relabel[v] = v;
  rng.shuffle(relabel);
  Graph g(n);
  std::set<std::pair<int, int>> present;
  for (const Graph::Edge& e : base.edges) {
    int u = relabel[e.u], v = relabel[e.v];
    auto key = std::minmax(u, v);
    present.insert({key.first, key.second});
    g.add_edge(u, v);
  }
  long long want = std::min<long long>(g.edge_count() + extra, max_edges(n));
  while (g.edge_count() < want) {
    int u = rng.below_int(n), v = rng.below_int(n);
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (!present.insert({key.first, key.second}).second) continue;
    g.add_edge(u, v);
  }
  require(lambda_at_least(g, k), ErrKind::InternalInvariantViolation,
          "circulant base must guarantee edge-connectivity k");
  return g;
}

Digraph random_digraph(Rng& rng, int n, int m) {
  require(n >= 1, ErrKind::BadParameters, "need at least one vertex");
  Digraph d(n);
  std::set<std::pair<int, int>> present;
  long long want = std::min<long long>(m, static_cast<long long>(n) * (n - 1));
  while (d.arc_count() < want) {
    int u = rng.below_int(n), v = rng.below_int(n);
    if (u == v) continue;
    if (!present.insert({u, v}).second) continue;
    d.add_arc(u, v);
  }
  return d;
}

Digraph random_strong_digraph(Rng& rng, int n, int m) {
  require(n >= 2, ErrKind::BadParameters, "need at least two vertices");
  Digraph d(n);
  std::set<std::pair<int, int>> present;
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  rng.shuffle(order);
  for (int i = 0; i < n; ++i) {
    int u = order[i], v = order[(i + 1) % n];
    present.insert({u, v});
    d.add_arc(u, v);
  }
  long long want = std::min<long long>(m, static_cast<long long>(n) * (n - 1));
  while (d.arc_count() < want) {
    int u = rng.below_int(n), v = rng.below_int(n);
    if (u == v) continue;
    if (!present.insert({u, v}).second) continue;
    d.add_arc(u, v);
  }
  return d;
}

Digraph random_arc_connected_digraph(Rng& rng, int n, int k, int extra) {
  require(n >= k + 2, ErrKind::BadParameters, "n too small for the circulant base");
  Digraph base = cycle_power_digraph(n, k);
  std::vector<int> relabel(n);
  for (int v = 0; v < n; ++v) relabel[v] = v;
  rng.shuffle(relabel);
  Digraph d(n);
  std::set<std::pair<int, int>> present;
  for (const Digraph::Arc& a : base.arcs) {
    int u = relabel[a.tail], v = relabel[a.head];
    present.insert({u, v});
    d.add_arc(u, v);
  }
  long long want = std::min<long long>(d.arc_count() + extra,
                                       static_cast<long long>(n) * (n - 1));
  while (d.arc_count() < want) {
    int u = rng.below_int(n), v = rng.below_int(n);
    if (u == v) continue;
    if (!present.insert({u, v}).second) continue;
    d.add_arc(u, v);
  }
  require(lambda_at_least(d, k), ErrKind::InternalInvariantViolation,
          "circulant base must guarantee arc-connectivity k");
  return d;
}

Digraph random_tournament(Rng& rng, int n) {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng.coin())
        d.add_arc(u, v);
      else
        d.add_arc(v, u);
    }
  return d;
}

Digraph random_strong_semicomplete(Rng& rng, int n, int two_cycles) {
  require(n >= 3, ErrKind::BadParameters, "need at least three vertices");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Digraph d = random_tournament(rng, n);
    std::set<std::pair<int, int>> added;
    for (int i = 0; i < two_cycles; ++i) {
      int u = rng.below_int(n), v = rng.below_int(n);
      if (u == v) continue;
      if (d.has_arc(u, v)) std::swap(u, v);
      if (!added.insert({u, v}).second) continue;
      d.add_arc(u, v);
    }
    if (is_strong(d)) return d;
  }
  fail(ErrKind::InternalInvariantViolation, "failed to sample a strong semicomplete digraph");
}

Digraph pad_min_semidegree(Rng& rng, Digraph d, int bound) {
  auto deficient = [&](const Digraph& cur) {
    auto out = cur.out_degrees();
    auto in = cur.in_degrees();
    for (int v = 0; v < cur.n; ++v)
      if (out[v] < bound || in[v] < bound) return v;
    return -1;
  };
  require(d.n > 2 * bound, ErrKind::BadParameters, "too few vertices for the degree bound");
  int v;
  while ((v = deficient(d)) != -1) {
    auto out = d.out_degrees();
    bool need_out = out[v] < bound;
    for (int tries = 0; tries < 10 * d.n; ++tries) {
      int w = rng.below_int(d.n);
      if (w == v) continue;
      if (need_out && !d.has_arc(v, w)) {
        d.add_arc(v, w);
        break;
      }
      if (!need_out && !d.has_arc(w, v)) {
        d.add_arc(w, v);
        break;
      }
    }
  }
  return d;
}

Digraph pad_min_outdegree(Rng& rng, Digraph d, int bound) {
  require(d.n > bound, ErrKind::BadParameters, "too few vertices for the degree bound");
  auto deficient = [&](const Digraph& cur) {
    auto out = cur.out_degrees();
    for (int v = 0; v < cur.n; ++v)
      if (out[v] < bound) return v;
    return -1;
  };
  int v;
  while ((v = deficient(d)) != -1) {
    for (int tries = 0; tries < 10 * d.n; ++tries) {
      int w = rng.below_int(d.n);
      if (w != v && !d.has_arc(v, w)) {
        d.add_arc(v, w);
        break;
      }
    }
  }
  return d;
}

Partition random_partition(Rng& rng, int n, int parts) {
  std::vector<int> assign(n);
  for (int v = 0; v < n; ++v) assign[v] = rng.below_int(parts);
  return Partition(std::move(assign), parts);
}

}  // namespace spansub
