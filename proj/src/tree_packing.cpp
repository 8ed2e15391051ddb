#include "spansub/tree_packing.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <queue>

namespace spansub {

namespace {

// Exchange-path state for the incremental matroid-union packer.
struct Packer {
  const Graph& g;
  int k;
  std::vector<int> forest_of;                                   // edge -> forest or -1
  std::vector<std::vector<std::vector<std::pair<int, int>>>> adj;  // forest -> vertex -> (to, edge)

  Packer(const Graph& graph, int forests)
      : g(graph), k(forests), forest_of(graph.edge_count(), -1),
        adj(forests, std::vector<std::vector<std::pair<int, int>>>(graph.n)) {}

  void attach(int e, int i) {
    forest_of[e] = i;
    adj[i][g.edges[e].u].push_back({g.edges[e].v, e});
    adj[i][g.edges[e].v].push_back({g.edges[e].u, e});
  }

  void detach(int e) {
    int i = forest_of[e];
    for (int v : {g.edges[e].u, g.edges[e].v}) {
      auto& list = adj[i][v];
      for (std::size_t idx = 0; idx < list.size(); ++idx)
        if (list[idx].second == e) {
          list.erase(list.begin() + static_cast<long>(idx));
          break;
        }
    }
    forest_of[e] = -1;
  }

  // Unique a-b path in forest i, as edge ids; empty optional when a and b
  // are in different trees.
  std::optional<std::vector<int>> forest_path(int i, int a, int b) const {
    std::vector<int> via_edge(g.n, -1), pred(g.n, -1);
    std::queue<int> q;
    q.push(a);
    pred[a] = a;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (v == b) break;
      for (auto [w, e] : adj[i][v])
        if (pred[w] == -1) {
          pred[w] = v;
          via_edge[w] = e;
          q.push(w);
        }
    }
    if (pred[b] == -1) return std::nullopt;
    std::vector<int> path;
    for (int v = b; v != a; v = pred[v]) path.push_back(via_edge[v]);
    return path;
  }

  // Attempts to make room for e0. Augments and returns true, or leaves the
  // forests untouched and reports the labelled closure via `closure_out`.
  bool try_insert(int e0, std::vector<int>* closure_out = nullptr) {
    std::vector<int> label(g.edge_count(), -2);  // -2 unseen, -1 root
    std::deque<int> queue;
    label[e0] = -1;
    queue.push_back(e0);
    std::vector<int> seen = {e0};
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      int u = g.edges[f].u, v = g.edges[f].v;
      for (int i = 0; i < k; ++i) {
        auto path = forest_path(i, u, v);
        if (!path) {
          augment(f, i, label);
          return true;
        }
        for (int x : *path)
          if (label[x] == -2) {
            label[x] = f;
            queue.push_back(x);
            seen.push_back(x);
          }
      }
    }
    if (closure_out) *closure_out = std::move(seen);
    return false;
  }

  void augment(int f, int i, const std::vector<int>& label) {
    while (true) {
      int pred = label[f];
      if (forest_of[f] == -1) {  // the root edge
        attach(f, i);
        break;
      }
      int j = forest_of[f];
      detach(f);
      attach(f, i);
      f = pred;
      i = j;
    }
  }

  bool forests_ok() const {
    for (int i = 0; i < k; ++i) {
      // acyclic: edges <= vertices - components
      std::vector<int> comp(g.n, -1);
      int components = 0;
      long long edge_count = 0;
      for (int v = 0; v < g.n; ++v) {
        if (comp[v] != -1) continue;
        std::queue<int> q;
        q.push(v);
        comp[v] = components;
        while (!q.empty()) {
          int x = q.front();
          q.pop();
          for (auto [w, e] : adj[i][x])
            if (comp[w] == -1) {
              comp[w] = components;
              q.push(w);
            }
        }
        ++components;
      }
      for (int e = 0; e < g.edge_count(); ++e)
        if (forest_of[e] == i) ++edge_count;
      if (edge_count != g.n - components) return false;
    }
    return true;
  }
};

}  // namespace

TreePacking tree_pack(const Graph& g, int k) {
  require(k >= 1, ErrKind::BadParameters, "k must be positive");
  Packer packer(g, k);
  std::vector<int> unused;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!packer.try_insert(e)) unused.push_back(e);
  }
  require(packer.forests_ok(), ErrKind::InternalInvariantViolation, "forest invariant broken");

  long long packed = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    if (packer.forest_of[e] != -1) ++packed;
  if (packed == static_cast<long long>(k) * (g.n - 1) && g.n >= 1) {
    TreePacking result;
    result.trees.assign(k, {});
    for (int e = 0; e < g.edge_count(); ++e)
      if (packer.forest_of[e] != -1) result.trees[packer.forest_of[e]].push_back(e);
    require(validate_packing(g, result, k), ErrKind::InternalInvariantViolation,
            "packing failed validation");
    return result;
  }

  // Certificate: closure of every unused edge over the final forests. Its
  // components form a partition with fewer than k(s-1) crossing edges.
  std::vector<char> in_closure(g.edge_count(), 0);
  for (int e : unused) {
    std::vector<int> closure;
    bool augmented = packer.try_insert(e, &closure);
    require(!augmented, ErrKind::InternalInvariantViolation,
            "unused edge became insertable after processing all edges");
    for (int x : closure) in_closure[x] = 1;
  }
  // Components of the closure edge set (singletons allowed).
  std::vector<int> part_of(g.n, -1);
  std::vector<std::vector<std::pair<int, int>>> closure_adj(g.n);
  for (int e = 0; e < g.edge_count(); ++e)
    if (in_closure[e]) {
      closure_adj[g.edges[e].u].push_back({g.edges[e].v, e});
      closure_adj[g.edges[e].v].push_back({g.edges[e].u, e});
    }
  int parts = 0;
  for (int v = 0; v < g.n; ++v) {
    if (part_of[v] != -1) continue;
    std::queue<int> q;
    q.push(v);
    part_of[v] = parts;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (auto [w, e] : closure_adj[x])
        if (part_of[w] == -1) {
          part_of[w] = parts;
          q.push(w);
        }
    }
    ++parts;
  }
  long long cross = 0;
  for (const Graph::Edge& e : g.edges)
    if (part_of[e.u] != part_of[e.v]) ++cross;
  require(cross < static_cast<long long>(k) * (parts - 1), ErrKind::InternalInvariantViolation,
          "packing certificate does not violate the tree-packing count");
  throw NoPackingError(std::move(part_of), parts);
}

bool validate_packing(const Graph& g, const TreePacking& packing, int k) {
  if (static_cast<int>(packing.trees.size()) != k) return false;
  std::vector<char> used(g.edge_count(), 0);
  for (const std::vector<int>& tree : packing.trees) {
    if (static_cast<int>(tree.size()) != g.n - 1) return false;
    std::vector<std::vector<int>> adj(g.n);
    for (int e : tree) {
      if (e < 0 || e >= g.edge_count() || used[e]) return false;
      used[e] = 1;
      adj[g.edges[e].u].push_back(g.edges[e].v);
      adj[g.edges[e].v].push_back(g.edges[e].u);
    }
    // connected with n-1 edges => spanning tree
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          q.push(w);
        }
    }
    if (reached != g.n) return false;
  }
  return true;
}

Bipartite2TResult bipartite_2t(const Graph& g, bool force, std::uint64_t seed) {
  if (!force)
    require(lambda_at_least(g, 7), ErrKind::PreconditionFailed,
            "bipartite 2T pipeline expects lambda >= 7 (use force to try anyway)");
  KPartiteEcResult ec = spanning_kpartite_ec(g, 2, seed);
  TreePacking packing = tree_pack(ec.subgraph, 2);
  return {std::move(ec.partition), std::move(ec.subgraph), std::move(packing)};
}

KPartiteKTResult kpartite_kt(const Graph& g, int k, bool force, std::uint64_t seed) {
  require(k >= 1, ErrKind::BadParameters, "k must be positive");
  if (!force)
    require(lambda_at_least(g, 2 * k + 1), ErrKind::PreconditionFailed,
            "kT pipeline expects lambda >= 2k+1 (use force to try anyway)");
  KPartiteEcResult ec = spanning_kpartite_ec(g, k + 1, seed);
  TreePacking packing = tree_pack(ec.subgraph, k);
  return {std::move(ec.partition), std::move(ec.subgraph), std::move(packing)};
}

int degeneracy_colouring(const Graph& g, std::vector<int>& colour_out) {
  auto adj = g.adjacency();
  std::vector<int> degree(g.n);
  for (int v = 0; v < g.n; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::vector<char> removed(g.n, 0);
  std::vector<int> peel_order;
  for (int round = 0; round < g.n; ++round) {
    int best = -1;
    for (int v = 0; v < g.n; ++v)
      if (!removed[v] && (best == -1 || degree[v] < degree[best])) best = v;
    removed[best] = 1;
    peel_order.push_back(best);
    for (auto [w, id] : adj[best])
      if (!removed[w]) --degree[w];
  }
  colour_out.assign(g.n, -1);
  int colours = 0;
  for (int idx = g.n - 1; idx >= 0; --idx) {
    int v = peel_order[idx];
    std::vector<char> used(g.n + 1, 0);
    for (auto [w, id] : adj[v])
      if (colour_out[w] >= 0) used[colour_out[w]] = 1;
    int c = 0;
    while (used[c]) ++c;
    colour_out[v] = c;
    colours = std::max(colours, c + 1);
  }
  return colours;
}

}  // namespace spansub
