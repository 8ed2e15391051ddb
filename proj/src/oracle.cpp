#include "spansub/oracle.hpp"

#include <algorithm>

#include "spansub/connectivity.hpp"

namespace spansub {

namespace {

// Calls fn for every partition of [n] into at most t parts, in canonical
// restricted-growth order: part_of[0] = 0 and each later entry is at most
// one more than the maximum so far. Stops early when fn returns true.
bool for_each_canonical_partition(int n, int t,
                                  const std::function<bool(const std::vector<int>&, int)>& fn,
                                  long long& examined) {
  std::vector<int> part_of(n, 0);
  std::vector<int> max_prefix(n, 0);
  if (n == 0) return false;
  while (true) {
    ++examined;
    int parts = 0;
    for (int v = 0; v < n; ++v) parts = std::max(parts, part_of[v] + 1);
    if (fn(part_of, parts)) return true;
    // advance the restricted-growth string
    int v = n - 1;
    while (v >= 1) {
      int limit = std::min(t - 1, max_prefix[v - 1] + 1);
      if (part_of[v] < limit) break;
      --v;
    }
    if (v < 1) return false;
    ++part_of[v];
    max_prefix[v] = std::max(max_prefix[v - 1], part_of[v]);
    for (int w = v + 1; w < n; ++w) {
      part_of[w] = 0;
      max_prefix[w] = max_prefix[v];
    }
  }
}

}  // namespace

Digraph induced_subdigraph(const Digraph& d, const std::vector<int>& vertices) {
  std::vector<int> map(d.n, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) map[vertices[i]] = static_cast<int>(i);
  Digraph h(static_cast<int>(vertices.size()));
  for (const Digraph::Arc& a : d.arcs)
    if (map[a.tail] >= 0 && map[a.head] >= 0) h.add_arc(map[a.tail], map[a.head]);
  return h;
}

SearchReport exists_strong_bipartite(const Digraph& d, int n_cap) {
  require(d.n <= n_cap, ErrKind::TooLarge, "bipartition enumeration over cap");
  SearchReport report;
  if (d.n == 0) return report;
  std::vector<int> part_of(d.n, 0);
  long long total = 1LL << (d.n - 1);
  for (long long mask = 0; mask < total; ++mask) {
    for (int v = 1; v < d.n; ++v) part_of[v] = (mask >> (v - 1)) & 1;
    ++report.examined;
    Partition p(part_of, 2);
    if (is_strong(partite_subgraph(d, p))) {
      report.found = true;
      report.certificate = p;
      return report;
    }
  }
  return report;
}

SearchReport exists_three_strong_bipartition(const Digraph& d, int n_cap) {
  require(d.n <= n_cap, ErrKind::TooLarge, "bipartition enumeration over cap");
  SearchReport report;
  if (d.n == 0) return report;
  std::vector<int> part_of(d.n, 0);
  long long total = 1LL << (d.n - 1);
  for (long long mask = 0; mask < total; ++mask) {
    for (int v = 1; v < d.n; ++v) part_of[v] = (mask >> (v - 1)) & 1;
    ++report.examined;
    std::vector<int> side0, side1;
    for (int v = 0; v < d.n; ++v) (part_of[v] ? side1 : side0).push_back(v);
    if (side0.empty() || side1.empty()) continue;
    Partition p(part_of, 2);
    if (!is_strong(partite_subgraph(d, p))) continue;
    if (!is_strong(induced_subdigraph(d, side0))) continue;
    if (!is_strong(induced_subdigraph(d, side1))) continue;
    report.found = true;
    report.certificate = p;
    return report;
  }
  return report;
}

namespace {

bool colourable_with(const Graph& g, int k, const std::vector<std::vector<std::pair<int, int>>>& adj) {
  std::vector<int> colour(g.n, -1);
  // order vertices by degree, descending: shrinks the search tree
  std::vector<int> order(g.n);
  for (int v = 0; v < g.n; ++v) order[v] = v;
  std::vector<int> deg = g.degrees();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });

  std::function<bool(int)> place = [&](int idx) -> bool {
    if (idx == g.n) return true;
    int v = order[idx];
    int used_max = 0;
    for (int i = 0; i < idx; ++i) used_max = std::max(used_max, colour[order[i]] + 1);
    int limit = std::min(k, used_max + 1);  // new colours are interchangeable
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (auto [w, id] : adj[v])
        if (colour[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      colour[v] = c;
      if (place(idx + 1)) return true;
      colour[v] = -1;
    }
    return false;
  };
  return place(0);
}

}  // namespace

int chromatic_number(const Graph& g, int n_cap) {
  require(g.n <= n_cap, ErrKind::TooLarge, "chromatic search over cap");
  if (g.n == 0) return 0;
  if (g.edges.empty()) return 1;
  auto adj = g.adjacency();
  for (int k = 1; k <= g.n; ++k)
    if (colourable_with(g, k, adj)) return k;
  return g.n;
}

std::pair<Partition, long long> exact_max_kcut(const Graph& g, int k, int n_cap) {
  require(g.n <= n_cap, ErrKind::TooLarge, "max k-cut enumeration over cap");
  require(k >= 1, ErrKind::BadParameters, "k must be positive");
  long long best = -1;
  std::vector<int> best_assign;
  long long examined = 0;
  for_each_canonical_partition(
      g.n, k,
      [&](const std::vector<int>& part_of, int) {
        long long cut = 0;
        for (const Graph::Edge& e : g.edges)
          if (part_of[e.u] != part_of[e.v]) ++cut;
        if (cut > best) {
          best = cut;
          best_assign = part_of;
        }
        return false;
      },
      examined);
  if (best_assign.empty() && g.n > 0) best_assign.assign(g.n, 0);
  return {Partition(best_assign, k), std::max(best, 0LL)};
}

bool majority_colouring_valid(const Digraph& d, const std::vector<int>& colour) {
  require(static_cast<int>(colour.size()) == d.n, ErrKind::PartitionMismatch,
          "colouring size mismatch");
  std::vector<long long> same(d.n, 0), out(d.n, 0);
  for (const Digraph::Arc& a : d.arcs) {
    ++out[a.tail];
    if (colour[a.tail] == colour[a.head]) ++same[a.tail];
  }
  for (int v = 0; v < d.n; ++v)
    if (2 * same[v] > out[v]) return false;
  return true;
}

SearchReport exists_partition_with(const Digraph& d, int t, DegreePredicate pred, long long bound,
                                   int n_cap) {
  require(d.n <= n_cap, ErrKind::TooLarge, "partition enumeration over cap");
  require(t >= 1, ErrKind::BadParameters, "t must be positive");
  SearchReport report;
  if (d.n == 0) return report;
  auto test = [&](const std::vector<int>& part_of, int parts) {
    Partition p(part_of, std::max(parts, 1));
    Digraph h = partite_subgraph(d, p);
    bool ok = true;
    switch (pred) {
      case DegreePredicate::MinSemiDegree: {
        auto od = h.out_degrees();
        auto id = h.in_degrees();
        for (int v = 0; v < h.n && ok; ++v)
          if (std::min(od[v], id[v]) < bound) ok = false;
        break;
      }
      case DegreePredicate::MinOutDegree: {
        auto od = h.out_degrees();
        for (int v = 0; v < h.n && ok; ++v)
          if (od[v] < bound) ok = false;
        break;
      }
      case DegreePredicate::Majority:
        ok = majority_colouring_valid(d, part_of);
        break;
    }
    if (ok) {
      report.found = true;
      report.certificate = Partition(part_of, t);
    }
    return ok;
  };
  for_each_canonical_partition(d.n, t, test, report.examined);
  return report;
}

}  // namespace spansub
