#include "spansub/tournament.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>

#include "spansub/gallery.hpp"
#include "spansub/oracle.hpp"

namespace spansub {

namespace {

std::vector<std::vector<char>> arc_matrix(const Digraph& d) {
  std::vector<std::vector<char>> has(d.n, std::vector<char>(d.n, 0));
  for (const Digraph::Arc& a : d.arcs) has[a.tail][a.head] = 1;
  return has;
}

}  // namespace

bool is_semicomplete(const Digraph& d) {
  auto has = arc_matrix(d);
  for (int u = 0; u < d.n; ++u)
    for (int v = u + 1; v < d.n; ++v)
      if (!has[u][v] && !has[v][u]) return false;
  return true;
}

bool is_tournament(const Digraph& d) {
  auto has = arc_matrix(d);
  if (static_cast<long long>(d.arc_count()) != static_cast<long long>(d.n) * (d.n - 1) / 2)
    return false;
  for (int u = 0; u < d.n; ++u)
    for (int v = u + 1; v < d.n; ++v)
      if (has[u][v] == has[v][u]) return false;
  return true;
}

bool validate_ham_cycle(const Digraph& d, const HamCycle& cycle,
                        const std::vector<std::pair<int, int>>* forbidden) {
  if (static_cast<int>(cycle.size()) != d.n || d.n < 2) return false;
  std::vector<char> seen(d.n, 0);
  for (int v : cycle) {
    if (v < 0 || v >= d.n || seen[v]) return false;
    seen[v] = 1;
  }
  auto has = arc_matrix(d);
  std::set<std::pair<int, int>> banned;
  if (forbidden) banned.insert(forbidden->begin(), forbidden->end());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
    if (!has[u][v]) return false;
    if (banned.count({u, v})) return false;
  }
  return true;
}

HamCycle hamiltonian_cycle(const Digraph& d) {
  require(is_semicomplete(d), ErrKind::NotSemicomplete, "hamiltonian cycle needs a semicomplete digraph");
  require(is_strong(d), ErrKind::NotStrong, "hamiltonian cycle needs a strong digraph");
  require(d.n >= 2, ErrKind::TooSmall, "need at least 2 vertices");
  auto has = arc_matrix(d);

  // Hamiltonian path by insertion.
  std::vector<int> path = {0};
  for (int v = 1; v < d.n; ++v) {
    if (has[v][path.front()]) {
      path.insert(path.begin(), v);
      continue;
    }
    if (has[path.back()][v]) {
      path.push_back(v);
      continue;
    }
    bool placed = false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (has[path[i]][v] && has[v][path[i + 1]]) {
        path.insert(path.begin() + static_cast<long>(i) + 1, v);
        placed = true;
        break;
      }
    require(placed, ErrKind::InternalInvariantViolation, "semicomplete path insertion failed");
  }

  // Initial cycle: longest prefix closable back to the path start.
  int close = -1;
  for (int j = static_cast<int>(path.size()) - 1; j >= 1; --j)
    if (has[path[j]][path[0]]) {
      close = j;
      break;
    }
  require(close != -1, ErrKind::InternalInvariantViolation, "strong digraph must close a cycle");
  std::vector<int> cycle(path.begin(), path.begin() + close + 1);
  std::vector<int> pending(path.begin() + close + 1, path.end());

  auto try_insert = [&](int v) -> bool {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int x = cycle[i], y = cycle[(i + 1) % cycle.size()];
      if (has[x][v] && has[v][y]) {
        cycle.insert(cycle.begin() + static_cast<long>(i) + 1, v);
        return true;
      }
    }
    return false;
  };

  while (!pending.empty()) {
    bool progress = false;
    for (std::size_t idx = 0; idx < pending.size(); ++idx)
      if (try_insert(pending[idx])) {
        pending.erase(pending.begin() + static_cast<long>(idx));
        progress = true;
        break;
      }
    if (progress) continue;

    // No direct insertion: every pending vertex either dominates the cycle
    // or is dominated by it. Strongness provides a dominated->dominating arc
    // and the pair splices in together.
    std::vector<int> dominated, dominating;
    for (int v : pending) {
      bool has_out = false, has_in = false;
      for (int c : cycle) {
        if (has[v][c]) has_out = true;
        if (has[c][v]) has_in = true;
      }
      require(!(has_out && has_in), ErrKind::InternalInvariantViolation,
              "mixed vertex should have been inserted");
      require(has_out || has_in, ErrKind::InternalInvariantViolation,
              "semicomplete vertex must touch the cycle");
      if (!has_out) dominated.push_back(v);
      if (!has_in) dominating.push_back(v);
    }
    std::sort(dominated.begin(), dominated.end());
    std::sort(dominating.begin(), dominating.end());
    int sa = -1, sb = -1;
    for (int a : dominated) {
      for (int b : dominating)
        if (has[a][b]) {
          sa = a;
          sb = b;
          break;
        }
      if (sa != -1) break;
    }
    require(sa != -1, ErrKind::InternalInvariantViolation,
            "strongness must give an arc from the dominated set to the dominating set");
    // cycle[0] -> a -> b -> cycle[1]
    cycle.insert(cycle.begin() + 1, {sa, sb});
    pending.erase(std::remove(pending.begin(), pending.end(), sa), pending.end());
    pending.erase(std::remove(pending.begin(), pending.end(), sb), pending.end());
  }
  require(validate_ham_cycle(d, cycle), ErrKind::InternalInvariantViolation,
          "constructed cycle failed validation");
  return cycle;
}

namespace {

// Induced subdigraph keeping `keep` (sorted); positional ids.
Digraph induced(const Digraph& d, const std::vector<int>& keep) {
  return induced_subdigraph(d, keep);
}

std::vector<int> all_but(int n, const std::vector<int>& removed) {
  std::vector<char> drop(n, 0);
  for (int v : removed) drop[v] = 1;
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (!drop[v]) keep.push_back(v);
  return keep;
}

}  // namespace

int removable_vertex(const Digraph& t) {
  require(is_tournament(t), ErrKind::NotTournament, "removable vertex is defined for tournaments");
  require(is_strong(t), ErrKind::NotStrong, "tournament must be strong");
  require(t.n >= 4, ErrKind::TooSmall, "need at least 4 vertices");
  auto out = t.out_degrees();
  auto in = t.in_degrees();
  int best = -1;
  long long best_semi = -1;
  for (int v = 0; v < t.n; ++v) {
    if (!is_strong(induced(t, all_but(t.n, {v})))) continue;
    long long semi = std::min(out[v], in[v]);
    if (best == -1 || semi < best_semi) {
      best = v;
      best_semi = semi;
    }
  }
  require(best != -1, ErrKind::NotFound, "no removable vertex; input was not a strong tournament");
  return best;
}

HamCycle hamiltonian_cycle_avoiding(const Digraph& t,
                                    const std::vector<std::pair<int, int>>& forbidden,
                                    long long budget) {
  require(is_semicomplete(t), ErrKind::NotSemicomplete, "need a semicomplete digraph");
  int r = static_cast<int>(forbidden.size()) + 1;
  require(is_k_strong(t, r), ErrKind::PreconditionFailed,
          "digraph must be (|forbidden|+1)-strong");

  // Heuristic first: a plain hamiltonian cycle may already avoid everything.
  HamCycle plain = hamiltonian_cycle(t);
  if (validate_ham_cycle(t, plain, &forbidden)) return plain;

  auto has = arc_matrix(t);
  for (auto [u, v] : forbidden)
    if (0 <= u && u < t.n && 0 <= v && v < t.n) has[u][v] = 0;

  std::vector<int> path = {0};
  std::vector<char> used(t.n, 0);
  used[0] = 1;
  long long steps = 0;
  std::function<bool()> extend = [&]() -> bool {
    if (static_cast<int>(path.size()) == t.n) return has[path.back()][0] != 0;
    for (int w = 0; w < t.n; ++w) {
      if (used[w] || !has[path.back()][w]) continue;
      if (++steps > budget) fail(ErrKind::BudgetExhausted, "cycle search budget exhausted");
      used[w] = 1;
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
      used[w] = 0;
    }
    return false;
  };
  require(extend(), ErrKind::BudgetExhausted, "no avoiding cycle found within budget");
  require(validate_ham_cycle(t, path, &forbidden), ErrKind::InternalInvariantViolation,
          "avoiding cycle failed validation");
  return path;
}

namespace {

bool bipartition_good(const Digraph& t, const Partition& p) {
  return is_strong(partite_subgraph(t, p));
}

Partition make_bipartition(int n, const std::vector<int>& part1) {
  std::vector<int> assign(n, 0);
  for (int v : part1) assign[v] = 1;
  return Partition(std::move(assign), 2);
}

// The two parity classes of a cycle covering all vertices but z: if z sees
// arcs both ways into one class, that class against the rest is good.
std::optional<Partition> parity_bipartition(const Digraph& t, const HamCycle& cycle, int z) {
  auto has = arc_matrix(t);
  for (int cls = 0; cls < 2; ++cls) {
    std::vector<int> side;
    for (std::size_t i = cls; i < cycle.size(); i += 2) side.push_back(cycle[i]);
    bool in_arc = false, out_arc = false;
    for (int x : side) {
      if (has[x][z]) in_arc = true;
      if (has[z][x]) out_arc = true;
    }
    if (in_arc && out_arc) {
      std::vector<int> other = {z};
      for (std::size_t i = 1 - cls; i < cycle.size(); i += 2) other.push_back(cycle[i]);
      Partition p = make_bipartition(t.n, other);
      require(bipartition_good(t, p), ErrKind::InternalInvariantViolation,
              "class with arcs both ways must give a good bipartition");
      return p;
    }
  }
  return std::nullopt;
}

// The six relabelings of T5 induced by its rotation automorphism (abc) and
// the reversal isomorphism (bc)(de).
const std::vector<std::array<int, 5>>& t5_symmetries() {
  static const std::vector<std::array<int, 5>> maps = {
      {0, 1, 2, 3, 4}, {1, 2, 0, 3, 4}, {2, 0, 1, 3, 4},
      {0, 2, 1, 4, 3}, {2, 1, 0, 4, 3}, {1, 0, 2, 4, 3},
  };
  return maps;
}

Partition good_bipartition_impl(const Digraph& t, bool reversed_retry);

// Non-regular odd case: remove the unbalanced successor v2 and its follower
// v3, recurse, and reattach. The (n-2)-cycle v1 z v4 ... certifies that
// T - {v2,v3} stays strong.
Partition nonregular_branch(const Digraph& t, int z, const HamCycle& cycle, int anchor_pos) {
  int n = t.n;
  int len = static_cast<int>(cycle.size());
  int v2 = cycle[(anchor_pos + 1) % len];
  int v3 = cycle[(anchor_pos + 2) % len];

  std::vector<int> keep = all_but(n, {v2, v3});
  Digraph rest = induced(t, keep);
  require(is_strong(rest), ErrKind::InternalInvariantViolation,
          "T - {v2,v3} must stay strong (certified by the rerouted cycle)");

  std::optional<Partition> sub;
  try {
    Partition q = good_bipartition_impl(rest, false);
    sub = std::move(q);
  } catch (const ExceptionalError& e) {
    require(e.name() != "C3", ErrKind::InternalInvariantViolation,
            "T'' = C3 would force T = T5, which was excluded");
    // T'' = T5: attach v2 to {b,c,e} and v3 to {a,d} of a T5 labelling.
    // The labelling is only fixed up to the symmetries of T5 and the role of
    // v2/v3 mirrors under reversal, so all variants are tried and validated.
    auto iso = find_isomorphism(exceptional("T5"), rest);
    require(iso.has_value(), ErrKind::InternalInvariantViolation, "T5 isomorphism disappeared");
    for (const auto& sym : t5_symmetries()) {
      for (int swap_roles = 0; swap_roles < 2; ++swap_roles) {
        std::vector<int> side2 = {swap_roles ? v2 : v3, keep[(*iso)[sym[0]]],
                                  keep[(*iso)[sym[3]]]};
        Partition p = make_bipartition(n, side2);
        if (bipartition_good(t, p)) return p;
      }
    }
    fail(ErrKind::InternalInvariantViolation, "T5 patch partition must be good");
  }

  for (int order = 0; order < 2; ++order) {
    std::vector<int> side2;
    for (int i = 0; i < rest.n; ++i)
      if (sub->part_of[i] == 1) side2.push_back(keep[i]);
    side2.push_back(order == 0 ? v3 : v2);
    std::vector<int> assign(n, 0);
    for (int v : side2) assign[v] = 1;
    assign[order == 0 ? v2 : v3] = 0;
    Partition p(std::move(assign), 2);
    if (bipartition_good(t, p)) return p;
  }
  fail(ErrKind::InternalInvariantViolation, "neither reattachment of v2/v3 is good");
}

Partition good_bipartition_impl(const Digraph& t, bool reversed_retry) {
  require(is_tournament(t), ErrKind::NotTournament, "good bipartitions are defined for tournaments");
  require(is_strong(t), ErrKind::NotStrong, "tournament must be strong");
  int n = t.n;
  if (n == 1) return Partition(std::vector<int>{0}, 2);
  if (n == 3) throw ExceptionalError("C3");
  if (n == 5 && find_isomorphism(exceptional("T5"), t).has_value()) throw ExceptionalError("T5");

  if (n % 2 == 0) {
    HamCycle cycle = hamiltonian_cycle(t);
    std::vector<int> odd_side;
    for (std::size_t i = 1; i < cycle.size(); i += 2) odd_side.push_back(cycle[i]);
    Partition p = make_bipartition(n, odd_side);
    require(bipartition_good(t, p), ErrKind::InternalInvariantViolation,
            "alternating hamiltonian cycle must give a good bipartition");
    return p;
  }

  int z = removable_vertex(t);
  std::vector<int> keep = all_but(n, {z});
  Digraph rest = induced(t, keep);
  HamCycle sub_cycle = hamiltonian_cycle(rest);
  HamCycle cycle;
  for (int i : sub_cycle) cycle.push_back(keep[i]);

  if (auto p = parity_bipartition(t, cycle, z)) return *p;

  // Claim of the induction step: the parity classes are exactly N^-(z) and
  // N^+(z), for every hamiltonian cycle of T - z.
  auto has = arc_matrix(t);
  int len = static_cast<int>(cycle.size());
  for (int i = 0; i < len; ++i) {
    bool to_z = has[cycle[i]][z];
    bool same = has[cycle[(i + 2) % len]][z];
    require(to_z == same && to_z != has[cycle[(i + 1) % len]][z],
            ErrKind::InternalInvariantViolation,
            "parity classes must match z's in- and out-neighbourhood");
  }

  auto out = t.out_degrees();
  auto in = t.in_degrees();
  bool regular = true;
  for (int v = 0; v < n; ++v)
    if (out[v] != in[v]) regular = false;

  if (!regular) {
    // v1 must point to z, which makes v2 range over N^+(z); pick the
    // unbalanced candidate with the smallest vertex id.
    int best_pos = -1, best_v2 = -1;
    for (int pos = 0; pos < len; ++pos) {
      if (!has[cycle[pos]][z]) continue;
      int v2 = cycle[(pos + 1) % len];
      if (out[v2] == in[v2]) continue;
      if (best_v2 == -1 || v2 < best_v2) {
        best_v2 = v2;
        best_pos = pos;
      }
    }
    if (best_pos != -1) return nonregular_branch(t, z, cycle, best_pos);
    // All of N^+(z) is balanced; the unbalanced vertices sit in N^-(z), so
    // solve the reversed tournament (good bipartitions transfer verbatim).
    require(!reversed_retry, ErrKind::InternalInvariantViolation,
            "reversal must expose an unbalanced successor");
    Partition p = good_bipartition_impl(t.reversed(), true);
    require(bipartition_good(t, p), ErrKind::InternalInvariantViolation,
            "reversed solution must stay good");
    return p;
  }

  // Regular tournament: reroute a hamiltonian cycle of T - z around the
  // out-arcs of the poorest N^-(z) vertex; the new cycle breaks the parity
  // claim and the generic step succeeds.
  std::vector<char> in_neg(n, 0), in_pos(n, 0);
  for (int v : keep) (has[v][z] ? in_neg : in_pos)[v] = 1;
  int poorest = -1;
  long long poorest_count = -1;
  for (int v = 0; v < n; ++v) {
    if (!in_neg[v]) continue;
    long long cnt = 0;
    for (int w = 0; w < n; ++w)
      if (in_pos[w] && has[v][w]) ++cnt;
    if (poorest == -1 || cnt < poorest_count) {
      poorest = v;
      poorest_count = cnt;
    }
  }
  int k = (n - 1) / 2;
  require(poorest_count <= (k - 1) / 2, ErrKind::InternalInvariantViolation,
          "poorest vertex exceeds the floor((k-1)/2) out-arc bound");
  std::vector<std::pair<int, int>> forbidden;
  for (int w = 0; w < n; ++w)
    if (in_pos[w] && has[poorest][w]) forbidden.push_back({poorest, w});

  // Map to T - z ids for the avoiding search.
  std::vector<int> to_sub(n, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) to_sub[keep[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> forbidden_sub;
  for (auto [u, v] : forbidden) forbidden_sub.push_back({to_sub[u], to_sub[v]});
  HamCycle avoiding_sub = hamiltonian_cycle_avoiding(rest, forbidden_sub);
  HamCycle avoiding;
  for (int i : avoiding_sub) avoiding.push_back(keep[i]);

  auto p = parity_bipartition(t, avoiding, z);
  require(p.has_value(), ErrKind::InternalInvariantViolation,
          "rerouted cycle must yield a good bipartition");
  return *p;
}

}  // namespace

Partition good_bipartition_tournament(const Digraph& t) { return good_bipartition_impl(t, false); }

Partition strong_bipartite_semicomplete(const Digraph& s) {
  require(is_semicomplete(s), ErrKind::NotSemicomplete, "input must be semicomplete");
  require(is_strong(s), ErrKind::NotStrong, "input must be strong");
  // Exhaustive enumeration over all semicomplete digraphs on 3 and 5
  // vertices: exactly these four admit no spanning strong bipartite
  // subdigraph. S_{5,2} and S_{5,3} do admit one (for T5 plus the b->e arc,
  // {a,e} against {b,c,d} already works), so they fall through to the
  // regular construction.
  if (auto name = is_exceptional(s)) {
    if (*name == "C3" || *name == "C_{3,1}" || *name == "T5" || *name == "S_{5,1}")
      throw ExceptionalError(*name);
  }
  int n = s.n;
  if (n == 1) return Partition(std::vector<int>{0}, 2);
  if (n == 2) return make_bipartition(2, {1});

  // Spanning tournament: drop one arc of each 2-cycle, never an arc of the
  // hamiltonian cycle; remaining ties keep the smaller arc id.
  HamCycle cycle = hamiltonian_cycle(s);
  std::set<std::pair<int, int>> on_cycle;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    on_cycle.insert({cycle[i], cycle[(i + 1) % cycle.size()]});
  std::vector<std::vector<int>> first_arc(n, std::vector<int>(n, -1));
  for (int id = 0; id < s.arc_count(); ++id) {
    auto [u, v] = s.arcs[id];
    if (first_arc[u][v] == -1) first_arc[u][v] = id;
  }
  Digraph t(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool uv = first_arc[u][v] != -1, vu = first_arc[v][u] != -1;
      if (uv && vu) {
        if (on_cycle.count({v, u}))
          t.add_arc(v, u);
        else if (on_cycle.count({u, v}))
          t.add_arc(u, v);
        else if (first_arc[u][v] < first_arc[v][u])
          t.add_arc(u, v);
        else
          t.add_arc(v, u);
      } else if (uv) {
        t.add_arc(u, v);
      } else if (vu) {
        t.add_arc(v, u);
      }
    }
  require(is_tournament(t) && validate_ham_cycle(t, cycle), ErrKind::InternalInvariantViolation,
          "spanning tournament must keep the hamiltonian cycle");

  try {
    Partition p = good_bipartition_tournament(t);
    require(bipartition_good(s, p), ErrKind::InternalInvariantViolation,
            "good bipartition of the spanning tournament must work for S");
    return p;
  } catch (const ExceptionalError& e) {
    if (e.name() == "C3") {
      // S on 3 vertices with at least two 2-cycles: some vertex against the
      // other two is good.
      for (int v = 0; v < 3; ++v) {
        Partition p = make_bipartition(3, {v});
        if (bipartition_good(s, p)) return p;
      }
      fail(ErrKind::InternalInvariantViolation, "3-vertex case analysis exhausted");
    }
    // T = T5. The proof's case analysis boils down to five partition
    // patterns; between the abc-rotation automorphism and the reversal
    // isomorphism of T5, one instance is always strong.
    static const std::vector<std::vector<int>> patterns = {
        {1, 2, 3},  // 2-cycle inside abc:      {a,e} vs {b,c,d}
        {1, 4},     // ded and cec 2-cycles:    {a,c,d} vs {b,e}
        {0, 1, 3},  // disjoint aea, cdc:       {c,e} vs {a,b,d}
        {0, 2, 3},  // aea and cec around e:    {b,e} vs {a,c,d}
        {0, 2, 4},  // ada and cdc around d:    {b,d} vs {a,c,e}
    };
    auto iso = find_isomorphism(exceptional("T5"), t);
    require(iso.has_value(), ErrKind::InternalInvariantViolation, "lost the T5 isomorphism");
    for (const auto& sym : t5_symmetries())
      for (const auto& pattern : patterns) {
        std::vector<int> side;
        for (int x : pattern) side.push_back((*iso)[sym[x]]);
        Partition p = make_bipartition(n, side);
        if (bipartition_good(s, p)) return p;
      }
    fail(ErrKind::InternalInvariantViolation, "T5 case analysis exhausted");
  }
}

std::optional<std::vector<int>> find_isomorphism(const Digraph& from, const Digraph& to) {
  require(from.n <= 8 && to.n <= 8, ErrKind::TooLarge, "brute-force isomorphism capped at 8 vertices");
  if (from.n != to.n || from.arc_count() != to.arc_count()) return std::nullopt;
  int n = from.n;
  // degree-pair multiset prefilter
  auto signature = [](const Digraph& d) {
    auto out = d.out_degrees();
    auto in = d.in_degrees();
    std::vector<std::pair<int, int>> sig;
    for (int v = 0; v < d.n; ++v) sig.push_back({out[v], in[v]});
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  if (signature(from) != signature(to)) return std::nullopt;

  std::vector<std::vector<int>> count_from(n, std::vector<int>(n, 0)),
      count_to(n, std::vector<int>(n, 0));
  for (const Digraph::Arc& a : from.arcs) ++count_from[a.tail][a.head];
  for (const Digraph::Arc& a : to.arcs) ++count_to[a.tail][a.head];

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        if (u != v && count_from[u][v] != count_to[perm[u]][perm[v]]) ok = false;
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::optional<std::string> is_exceptional(const Digraph& s) {
  if (s.n != 3 && s.n != 5) return std::nullopt;
  for (const std::string& name : exceptional_names()) {
    Digraph c = exceptional(name);
    if (c.n == s.n && find_isomorphism(c, s).has_value()) return name;
  }
  return std::nullopt;
}

}  // namespace spansub
