#include "spansub/cut_improver.hpp"

#include <algorithm>

#include "spansub/rng.hpp"

namespace spansub {

ShiftScores shift_scores(const Graph& g, const Partition& p, const CutWitness& witness) {
  p.check_covers(g.n);
  int k = p.part_count;
  std::vector<char> in_x(g.n, 0);
  for (int v : witness.side_x) in_x[v] = 1;

  ShiftScores s;
  s.scores.assign(k, 0);
  s.x_sets.assign(k, {});
  s.y_sets.assign(k, {});
  for (int v = 0; v < g.n; ++v) {
    if (in_x[v])
      s.x_sets[p.part_of[v]].push_back(v);
    else
      s.y_sets[p.part_of[v]].push_back(v);
  }
  for (const Graph::Edge& e : g.edges) {
    if (in_x[e.u] == in_x[e.v]) continue;
    int xv = in_x[e.u] ? e.u : e.v;
    int yv = in_x[e.u] ? e.v : e.u;
    int shift = (p.part_of[yv] - p.part_of[xv] + k) % k;
    ++s.scores[shift];
  }
  long long total = 0;
  for (long long sc : s.scores) total += sc;
  require(total == witness.value, ErrKind::InternalInvariantViolation,
          "shift scores must sum to the cut value");
  return s;
}

Partition apply_shift(const Partition& p, const CutWitness& witness, int q) {
  int k = p.part_count;
  require(1 <= q && q <= k - 1, ErrKind::BadShift, "shift index out of range");
  std::vector<char> in_x(p.size(), 0);
  for (int v : witness.side_x) in_x[v] = 1;
  std::vector<int> assign(p.size());
  for (int v = 0; v < p.size(); ++v) {
    if (in_x[v])
      assign[v] = p.part_of[v];
    else
      assign[v] = (p.part_of[v] - q + k) % k;  // Y_j joins part j - q, i.e. part i takes Y_{i+q}
  }
  return Partition(std::move(assign), k);
}

namespace {

long long crossing_count(const Graph& g, const Partition& p) {
  long long c = 0;
  for (const Graph::Edge& e : g.edges)
    if (p.part_of[e.u] != p.part_of[e.v]) ++c;
  return c;
}

}  // namespace

KPartiteEcResult spanning_kpartite_ec(const Graph& g, int k, std::uint64_t seed,
                                      std::vector<EcTraceStep>* trace) {
  require(2 <= k && k <= g.n, ErrKind::BadParameters, "need 2 <= k <= |V|");
  require(is_connected(g), ErrKind::Disconnected, "input graph must be connected");

  long long lambda_g = global_lambda(g).first;
  long long target = kpartite_ec_target(lambda_g, k);

  std::vector<int> order(g.n);
  for (int v = 0; v < g.n; ++v) order[v] = v;
  if (seed != 0) {
    Rng rng(seed);
    rng.shuffle(order);
  }
  std::vector<int> assign(g.n);
  for (int i = 0; i < g.n; ++i) assign[order[i]] = i % k;
  Partition p(std::move(assign), k);

  int iterations = 0;
  long long crossing = crossing_count(g, p);
  while (true) {
    Graph h = partite_subgraph(g, p);
    auto [lambda_h, h_witness] = global_lambda(h);
    if (lambda_h >= target) {
      return {p, std::move(h), iterations};
    }
    // Score the deficient side against the host graph: the decomposition
    // d_G(X) = sum of shift scores is what drives the improvement step.
    CutWitness witness = make_cut_witness(g, h_witness.side_x);
    ShiftScores s = shift_scores(g, p, witness);
    int q = -1;
    for (int cand = 1; cand < k; ++cand)
      if (s.scores[cand] < s.scores[0]) {
        q = cand;
        break;
      }
    require(q != -1, ErrKind::InternalInvariantViolation,
            "deficient partition admits no improving shift");
    if (trace) trace->push_back({witness, s.scores, q});
    p = apply_shift(p, witness, q);
    ++iterations;
    long long new_crossing = crossing_count(g, p);
    require(new_crossing == crossing + (s.scores[0] - s.scores[q]),
            ErrKind::InternalInvariantViolation, "crossing gain must equal e_0 - e_q");
    require(new_crossing > crossing, ErrKind::InternalInvariantViolation,
            "crossing count must strictly increase");
    crossing = new_crossing;
    require(iterations <= g.edge_count(), ErrKind::InternalInvariantViolation,
            "more improvement steps than edges");
  }
}

}  // namespace spansub
