#include "spansub/ear_decomposition.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "spansub/tree_packing.hpp"

namespace spansub {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Shortest directed cycle: for every arc (u,v), a shortest v->u path closes
// a candidate. Ties go to the smaller arc id.
Ear shortest_cycle(const Digraph& d) {
  auto adj = d.out_adjacency();
  int best_len = kInf;
  std::vector<int> best_arcs;
  for (int id = 0; id < d.arc_count(); ++id) {
    int u = d.arcs[id].tail, v = d.arcs[id].head;
    std::vector<int> dist(d.n, kInf), via(d.n, -1), pred(d.n, -1);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      if (x == u) break;
      for (auto [y, a] : adj[x])
        if (dist[y] == kInf) {
          dist[y] = dist[x] + 1;
          via[y] = a;
          pred[y] = x;
          q.push(y);
        }
    }
    if (dist[u] == kInf || dist[u] + 1 >= best_len) continue;
    best_len = dist[u] + 1;
    best_arcs.clear();
    std::vector<int> back;
    for (int x = u; x != v; x = pred[x]) back.push_back(via[x]);
    best_arcs.push_back(id);
    for (auto it = back.rbegin(); it != back.rend(); ++it) best_arcs.push_back(*it);
  }
  require(best_len < kInf, ErrKind::NotStrong, "no directed cycle found");
  Ear ear;
  ear.arcs = best_arcs;
  ear.vertices.push_back(d.arcs[best_arcs[0]].tail);
  for (int a : best_arcs) ear.vertices.push_back(d.arcs[a].head);
  return ear;
}

Ear cycle_from_vertices(const Digraph& d, const std::vector<int>& cycle) {
  require(cycle.size() >= 2, ErrKind::BadStartCycle, "start cycle needs >= 2 vertices");
  std::vector<char> used(d.n, 0);
  for (int v : cycle) {
    require(0 <= v && v < d.n, ErrKind::BadStartCycle, "start cycle vertex out of range");
    require(!used[v], ErrKind::BadStartCycle, "start cycle repeats a vertex");
    used[v] = 1;
  }
  Ear ear;
  ear.vertices = cycle;
  ear.vertices.push_back(cycle[0]);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
    int found = -1;
    for (int id = 0; id < d.arc_count(); ++id)
      if (d.arcs[id].tail == u && d.arcs[id].head == v) {
        found = id;
        break;
      }
    require(found != -1, ErrKind::BadStartCycle, "start cycle arc missing from digraph");
    ear.arcs.push_back(found);
  }
  return ear;
}

// Phase 1: initial cycle plus shortest non-trivial ears until spanning.
std::vector<Ear> spanning_ears(const Digraph& d, const std::optional<std::vector<int>>& start) {
  require(d.n >= 2, ErrKind::TooSmall, "ear decomposition needs >= 2 vertices");
  require(is_strong(d), ErrKind::NotStrong, "ear decomposition needs a strong digraph");

  std::vector<Ear> ears;
  ears.push_back(start ? cycle_from_vertices(d, *start) : shortest_cycle(d));

  std::vector<char> covered(d.n, 0);
  for (int v : ears[0].vertices) covered[v] = 1;
  int covered_count = 0;
  for (int v = 0; v < d.n; ++v) covered_count += covered[v];

  auto adj = d.out_adjacency();
  while (covered_count < d.n) {
    // Multi-source BFS through uncovered vertices only.
    std::vector<int> dist(d.n, kInf), via(d.n, -1), pred(d.n, -1);
    std::queue<int> q;
    for (int id = 0; id < d.arc_count(); ++id) {
      int u = d.arcs[id].tail, v = d.arcs[id].head;
      if (covered[u] && !covered[v] && dist[v] == kInf) {
        dist[v] = 1;
        via[v] = id;
        pred[v] = -1;
        q.push(v);
      }
    }
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (auto [y, a] : adj[x])
        if (!covered[y] && dist[y] == kInf) {
          dist[y] = dist[x] + 1;
          via[y] = a;
          pred[y] = x;
          q.push(y);
        }
    }
    // Close the shortest ear; ties by re-entry vertex id, then arc id.
    int best_len = kInf, best_w = kInf, best_arc = -1;
    for (int id = 0; id < d.arc_count(); ++id) {
      int x = d.arcs[id].tail, w = d.arcs[id].head;
      if (covered[x] || !covered[w] || dist[x] == kInf) continue;
      int len = dist[x] + 1;
      if (len < best_len || (len == best_len && (w < best_w || (w == best_w && id < best_arc)))) {
        best_len = len;
        best_w = w;
        best_arc = id;
      }
    }
    require(best_arc != -1, ErrKind::InternalInvariantViolation,
            "strong digraph must admit an ear reaching new vertices");
    Ear ear;
    std::vector<int> back;
    back.push_back(best_arc);
    for (int x = d.arcs[best_arc].tail; x != -1; x = pred[x]) back.push_back(via[x]);
    for (auto it = back.rbegin(); it != back.rend(); ++it) ear.arcs.push_back(*it);
    ear.vertices.push_back(d.arcs[ear.arcs[0]].tail);
    for (int a : ear.arcs) ear.vertices.push_back(d.arcs[a].head);
    for (std::size_t i = 1; i + 1 < ear.vertices.size(); ++i) {
      covered[ear.vertices[i]] = 1;
      ++covered_count;
    }
    ears.push_back(std::move(ear));
  }
  return ears;
}

}  // namespace

EarDecomposition ear_decomposition(const Digraph& d,
                                   const std::optional<std::vector<int>>& start_cycle) {
  EarDecomposition ed;
  ed.ears = spanning_ears(d, start_cycle);
  std::vector<char> used(d.arc_count(), 0);
  for (const Ear& ear : ed.ears)
    for (int a : ear.arcs) used[a] = 1;
  for (int id = 0; id < d.arc_count(); ++id)
    if (!used[id]) {
      Ear trivial;
      trivial.arcs = {id};
      trivial.vertices = {d.arcs[id].tail, d.arcs[id].head};
      ed.ears.push_back(std::move(trivial));
    }
  require(validate_ear_decomposition(d, ed), ErrKind::InternalInvariantViolation,
          "constructed ear decomposition failed validation");
  return ed;
}

bool validate_ear_decomposition(const Digraph& d, const EarDecomposition& ed) {
  if (ed.ears.empty()) return false;
  std::vector<char> arc_used(d.arc_count(), 0);
  std::vector<char> covered(d.n, 0);
  for (std::size_t i = 0; i < ed.ears.size(); ++i) {
    const Ear& ear = ed.ears[i];
    if (ear.arcs.empty() || ear.vertices.size() != ear.arcs.size() + 1) return false;
    for (std::size_t j = 0; j < ear.arcs.size(); ++j) {
      int a = ear.arcs[j];
      if (a < 0 || a >= d.arc_count() || arc_used[a]) return false;
      arc_used[a] = 1;
      if (d.arcs[a].tail != ear.vertices[j] || d.arcs[a].head != ear.vertices[j + 1]) return false;
    }
    int first = ear.vertices.front(), last = ear.vertices.back();
    if (i == 0) {
      if (first != last) return false;
      // the cycle visits distinct vertices apart from the closing repeat
      for (std::size_t j = 0; j + 1 < ear.vertices.size(); ++j)
        for (std::size_t l = j + 1; l + 1 < ear.vertices.size(); ++l)
          if (ear.vertices[j] == ear.vertices[l]) return false;
    } else {
      if (!covered[first] || !covered[last]) return false;
      if (first == last && ear.arcs.size() < 2) return false;
      for (std::size_t j = 1; j + 1 < ear.vertices.size(); ++j) {
        int v = ear.vertices[j];
        if (covered[v]) return false;  // internal vertices must be new
        for (std::size_t l = j + 1; l + 1 < ear.vertices.size(); ++l)
          if (v == ear.vertices[l]) return false;
      }
    }
    for (int v : ear.vertices) covered[v] = 1;
  }
  for (int id = 0; id < d.arc_count(); ++id)
    if (!arc_used[id]) return false;
  for (int v = 0; v < d.n; ++v)
    if (!covered[v]) return false;
  return true;
}

Strong3PartiteResult strong_3partite(const Digraph& d) {
  require(is_strong(d), ErrKind::NotStrong, "input must be strong");
  if (d.n <= 1) {
    Partition p(std::vector<int>(d.n, 0), 1);
    return {p, Digraph(d.n)};
  }
  std::vector<Ear> ears = spanning_ears(d, std::nullopt);
  Digraph dq(d.n);
  for (const Ear& ear : ears)
    for (int a : ear.arcs) dq.add_arc(d.arcs[a].tail, d.arcs[a].head);

  std::vector<int> colour;
  int colours = degeneracy_colouring(underlying_graph(dq), colour);
  require(colours <= 3, ErrKind::InternalInvariantViolation,
          "shortest-ear subdigraph must be 3-colourable");
  Partition p(colour, std::max(1, colours));
  for (const Digraph::Arc& a : dq.arcs)
    require(p.part_of[a.tail] != p.part_of[a.head], ErrKind::InternalInvariantViolation,
            "every arc of the ear subdigraph must cross the colouring");
  require(is_strong(dq), ErrKind::InternalInvariantViolation,
          "spanning ear subdigraph must stay strong");
  return {std::move(p), std::move(dq)};
}

}  // namespace spansub
