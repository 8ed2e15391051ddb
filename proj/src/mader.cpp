#include "spansub/mader.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spansub {

namespace {

Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

std::map<std::pair<int, int>, long long> arc_multiset(const Digraph& d) {
  std::map<std::pair<int, int>, long long> m;
  for (const Digraph::Arc& a : d.arcs) ++m[{a.tail, a.head}];
  return m;
}

// Re-introduces s: drops the created arcs and restores the split pairs.
Digraph unsplit(const Digraph& reduced, const SplitRecord& rec) {
  int s = rec.vertex;
  std::vector<char> created(reduced.arc_count(), 0);
  for (int id : rec.created_arcs) created[id] = 1;
  auto back = [&](int x) { return x < s ? x : x + 1; };
  Digraph d(reduced.n + 1);
  for (int id = 0; id < reduced.arc_count(); ++id)
    if (!created[id]) d.add_arc(back(reduced.arcs[id].tail), back(reduced.arcs[id].head));
  for (auto [u, v] : rec.pairs) {
    d.add_arc(u, s);
    d.add_arc(s, v);
  }
  return d;
}

}  // namespace

bool arc_multiset_subset(const Digraph& sub, const Digraph& host) {
  if (sub.n != host.n) return false;
  auto m_sub = arc_multiset(sub);
  auto m_host = arc_multiset(host);
  for (const auto& [key, count] : m_sub) {
    auto it = m_host.find(key);
    if (it == m_host.end() || it->second < count) return false;
  }
  return true;
}

Digraph minimize_arcs(const Digraph& d, int k) {
  require(k >= 1, ErrKind::BadParameters, "k must be positive");
  require(d.n >= 2 && lambda_at_least(d, k), ErrKind::TooWeak,
          "input is not k-arc-connected");
  std::vector<char> removed(d.arc_count(), 0);
  for (int id = 0; id < d.arc_count(); ++id) {
    std::vector<std::pair<int, int>> arcs;
    for (int other = 0; other < d.arc_count(); ++other)
      if (!removed[other] && other != id) arcs.push_back({d.arcs[other].tail, d.arcs[other].head});
    if (lambda_at_least(from_arcs(d.n, arcs), k)) removed[id] = 1;
  }
  std::vector<std::pair<int, int>> arcs;
  for (int id = 0; id < d.arc_count(); ++id)
    if (!removed[id]) arcs.push_back({d.arcs[id].tail, d.arcs[id].head});
  return from_arcs(d.n, arcs);
}

int find_low_vertex(const Digraph& d, int k) {
  auto out = d.out_degrees();
  auto in = d.in_degrees();
  for (int v = 0; v < d.n; ++v)
    if (out[v] == k && in[v] == k) return v;
  fail(ErrKind::NotFound,
       "no balanced degree-k vertex; input was not minimally k-arc-connected");
}

namespace {

// Greedy pairing with backtracking over the out-partners, first admissible
// pairing in arc-id order.
struct Splitter {
  int n;
  int s;
  int k;
  bool fast = false;
  std::vector<std::pair<int, int>> arcs;  // current working multiset
  std::vector<char> is_created;
  std::vector<std::pair<int, int>> pairs;

  bool admissible() const {
    Digraph cur(n);
    for (auto [u, v] : arcs) cur.add_arc(u, v);
    return lambda_at_least_excluding(cur, k, s);
  }

  bool solve() {
    int in_pos = -1;
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if (arcs[i].second == s) {
        in_pos = static_cast<int>(i);
        break;
      }
    if (in_pos == -1) return !fast || admissible();  // all of s's arcs are split
    int u = arcs[in_pos].first;
    // Real partners first, in arc-id order; the u -> s -> u pair comes last.
    // It produces no arc at all (a loop contributes nothing to connectivity),
    // which is the only way forward when s is tied to u alone.
    std::vector<int> partners;
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if (arcs[i].first == s && arcs[i].second != u) partners.push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if (arcs[i].first == s && arcs[i].second == u) {
        partners.push_back(static_cast<int>(i));
        break;
      }
    for (int out_pos : partners) {
      int v = arcs[out_pos].second;
      std::vector<std::pair<int, int>> saved = arcs;
      std::vector<char> saved_created = is_created;
      int hi = std::max(in_pos, out_pos), lo = std::min(in_pos, out_pos);
      arcs.erase(arcs.begin() + hi);
      arcs.erase(arcs.begin() + lo);
      is_created.erase(is_created.begin() + hi);
      is_created.erase(is_created.begin() + lo);
      if (v != u) {
        arcs.push_back({u, v});
        is_created.push_back(1);
      }
      if (fast || admissible()) {
        pairs.push_back({u, v});
        if (solve()) return true;
        pairs.pop_back();
      }
      arcs = std::move(saved);
      is_created = std::move(saved_created);
    }
    return false;
  }
};

}  // namespace

SplitResult split_off(const Digraph& d, int s, int k, bool fast) {
  require(0 <= s && s < d.n, ErrKind::BadParameters, "vertex out of range");
  auto out = d.out_degrees();
  auto in = d.in_degrees();
  require(in[s] == out[s], ErrKind::Unbalanced, "split vertex must have equal in- and out-degree");
  require(d.n >= 3, ErrKind::TooSmall, "splitting needs at least 3 vertices");
  require(lambda_at_least(d, k), ErrKind::TooWeak, "input is not k-arc-connected");

  Splitter splitter;
  splitter.n = d.n;
  splitter.s = s;
  splitter.k = k;
  splitter.fast = fast;
  for (const Digraph::Arc& a : d.arcs) splitter.arcs.push_back({a.tail, a.head});
  splitter.is_created.assign(d.arc_count(), 0);
  require(splitter.solve(), ErrKind::NoPairing,
          "no admissible pairing found; this contradicts the splitting theorem");

  SplitResult result;
  result.record.vertex = s;
  result.record.pairs = splitter.pairs;
  Digraph reduced(d.n - 1);
  auto shift = [&](int x) { return x < s ? x : x - 1; };
  for (std::size_t i = 0; i < splitter.arcs.size(); ++i) {
    auto [u, v] = splitter.arcs[i];
    require(u != s && v != s, ErrKind::InternalInvariantViolation,
            "split vertex still has incident arcs");
    int id = reduced.add_arc(shift(u), shift(v));
    if (splitter.is_created[i]) result.record.created_arcs.push_back(id);
  }
  require(lambda_at_least(reduced, k), ErrKind::InternalInvariantViolation,
          "reduced digraph lost k-arc-connectivity");
  result.reduced = std::move(reduced);
  return result;
}

namespace {

KacPartiteResult kac_partite_rec(const Digraph& d, int k, bool fast) {
  int n = d.n;
  if (n <= 2 * k + 1) {
    KacPartiteResult res;
    res.partition = Partition::singletons(n);
    res.subdigraph = d;
    return res;
  }

  Digraph dmin = minimize_arcs(d, k);
  int s = find_low_vertex(dmin, k);
  SplitResult split = split_off(dmin, s, k, fast);
  // Exact replay check: lifting the record must reconstruct the minimized
  // digraph's arc multiset.
  require(arc_multiset(unsplit(split.reduced, split.record)) == arc_multiset(dmin),
          ErrKind::InternalInvariantViolation, "split trace replay mismatch");

  KacPartiteResult sub = kac_partite_rec(split.reduced, k, fast);

  auto back = [&](int x) { return x < s ? x : x + 1; };
  // Lift A(s): remove one crossing occurrence per pair if present, then
  // restore the two arcs at s. Pairs lying inside a part were never in the
  // subdigraph, so nothing is removed for them.
  std::multimap<std::pair<int, int>, int> available;
  std::vector<std::pair<int, int>> h_arcs;
  for (const Digraph::Arc& a : sub.subdigraph.arcs)
    h_arcs.push_back({back(a.tail), back(a.head)});
  std::vector<char> dropped(h_arcs.size(), 0);
  for (std::size_t i = 0; i < h_arcs.size(); ++i) available.insert({h_arcs[i], static_cast<int>(i)});
  std::vector<std::pair<int, int>> s_arcs;
  for (auto [u, v] : split.record.pairs) {
    auto it = available.find({u, v});
    if (it != available.end()) {
      dropped[it->second] = 1;
      available.erase(it);
    }
    s_arcs.push_back({u, s});
    s_arcs.push_back({s, v});
  }
  std::vector<std::pair<int, int>> lifted;
  for (std::size_t i = 0; i < h_arcs.size(); ++i)
    if (!dropped[i]) lifted.push_back(h_arcs[i]);
  for (auto [u, v] : s_arcs) lifted.push_back({u, v});
  Digraph h = from_arcs(n, lifted);
  require(lambda_at_least(h, k), ErrKind::InternalInvariantViolation,
          "lifted subdigraph lost k-arc-connectivity");

  // Colour s: a part with no neighbour of s absorbs it, otherwise s is
  // adjacent to all parts, which caps them at 2k, and opens its own.
  int t = sub.partition.part_count;
  std::vector<int> assign(n);
  for (int x = 0; x < split.reduced.n; ++x) assign[back(x)] = sub.partition.part_of[x];
  std::vector<char> part_has_neighbour(t + 1, 0);
  for (auto [u, v] : s_arcs) {
    int other = (u == s) ? v : u;
    part_has_neighbour[assign[other]] = 1;
  }
  int chosen = -1;
  for (int r = 0; r < t; ++r)
    if (!part_has_neighbour[r]) {
      chosen = r;
      break;
    }
  int part_count = t;
  if (chosen == -1) {
    require(t <= 2 * k, ErrKind::InternalInvariantViolation,
            "s adjacent to more than 2k parts");
    chosen = t;
    part_count = t + 1;
  }
  assign[s] = chosen;

  KacPartiteResult res;
  res.partition = Partition(std::move(assign), part_count);
  res.subdigraph = std::move(h);
  res.trace = std::move(sub.trace);
  res.trace.insert(res.trace.begin(), split.record);
  return res;
}

}  // namespace

KacPartiteResult spanning_kac_partite(const Digraph& d, int k, bool fast) {
  require(k >= 1, ErrKind::BadParameters, "k must be positive");
  require(d.n >= 2 && lambda_at_least(d, k), ErrKind::TooWeak, "input is not k-arc-connected");
  KacPartiteResult res = kac_partite_rec(d, k, fast);
  require(res.partition.part_count <= 2 * k + 1, ErrKind::InternalInvariantViolation,
          "more than 2k+1 parts");
  require(arc_multiset_subset(res.subdigraph, d), ErrKind::InternalInvariantViolation,
          "result is not a sub-multidigraph of the input");
  require(lambda_at_least(res.subdigraph, k), ErrKind::InternalInvariantViolation,
          "result is not k-arc-connected");
  for (const Digraph::Arc& a : res.subdigraph.arcs)
    require(res.partition.part_of[a.tail] != res.partition.part_of[a.head],
            ErrKind::InternalInvariantViolation, "parts must be independent in the result");
  return res;
}

Digraph collapse_parallel_arcs(const Digraph& d) {
  std::set<std::pair<int, int>> seen;
  Digraph out(d.n);
  for (const Digraph::Arc& a : d.arcs)
    if (seen.insert({a.tail, a.head}).second) out.add_arc(a.tail, a.head);
  return out;
}

}  // namespace spansub
