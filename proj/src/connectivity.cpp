#include "spansub/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace spansub {

namespace {

constexpr long long kNoCap = std::numeric_limits<long long>::max();

// Residual network with integral capacities stored as paired half-edges.
struct FlowNet {
  struct Half {
    int to;
    int cap;
  };
  int n;
  std::vector<Half> halves;
  std::vector<std::vector<int>> out;

  explicit FlowNet(int vertices) : n(vertices), out(vertices) {}

  void add(int u, int v, int cap_fwd, int cap_back) {
    out[u].push_back(static_cast<int>(halves.size()));
    halves.push_back({v, cap_fwd});
    out[v].push_back(static_cast<int>(halves.size()));
    halves.push_back({u, cap_back});
  }

  // One augmenting path of unit flow, BFS on the residual graph.
  bool augment(int s, int t) {
    std::vector<int> pred(n, -1);
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty() && !seen[t]) {
      int v = q.front();
      q.pop();
      for (int h : out[v]) {
        if (halves[h].cap <= 0) continue;
        int w = halves[h].to;
        if (seen[w]) continue;
        seen[w] = 1;
        pred[w] = h;
        q.push(w);
      }
    }
    if (!seen[t]) return false;
    for (int v = t; v != s;) {
      int h = pred[v];
      halves[h].cap -= 1;
      halves[h ^ 1].cap += 1;
      v = halves[h ^ 1].to;
    }
    return true;
  }

  long long max_flow(int s, int t, long long limit) {
    long long flow = 0;
    while (flow < limit && augment(s, t)) ++flow;
    return flow;
  }

  std::vector<char> source_side(int s) const {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int h : out[v])
        if (halves[h].cap > 0 && !seen[halves[h].to]) {
          seen[halves[h].to] = 1;
          q.push(halves[h].to);
        }
    }
    return seen;
  }
};

FlowNet build_net(const Graph& g) {
  FlowNet net(g.n);
  for (const Graph::Edge& e : g.edges) net.add(e.u, e.v, 1, 1);
  return net;
}

FlowNet build_net(const Digraph& d) {
  FlowNet net(d.n);
  for (const Digraph::Arc& a : d.arcs) net.add(a.tail, a.head, 1, 0);
  return net;
}

CutWitness witness_from_side(const Graph& g, const std::vector<char>& side) {
  CutWitness w;
  for (int v = 0; v < g.n; ++v)
    if (side[v]) w.side_x.push_back(v);
  for (int id = 0; id < g.edge_count(); ++id) {
    bool a = side[g.edges[id].u], b = side[g.edges[id].v];
    if (a != b) w.crossing.push_back(id);
  }
  w.value = static_cast<long long>(w.crossing.size());
  return w;
}

CutWitness witness_from_side(const Digraph& d, const std::vector<char>& side) {
  CutWitness w;
  for (int v = 0; v < d.n; ++v)
    if (side[v]) w.side_x.push_back(v);
  for (int id = 0; id < d.arc_count(); ++id)
    if (side[d.arcs[id].tail] && !side[d.arcs[id].head]) w.crossing.push_back(id);
  w.value = static_cast<long long>(w.crossing.size());
  return w;
}

template <typename G>
std::pair<long long, CutWitness> local_lambda_impl(const G& g, int u, int v) {
  require(u != v, ErrKind::SameVertex, "lambda(u,v) needs distinct vertices");
  require(0 <= u && u < g.n && 0 <= v && v < g.n, ErrKind::BadParameters, "vertex out of range");
  FlowNet net = build_net(g);
  long long flow = net.max_flow(u, v, kNoCap);
  CutWitness w = witness_from_side(g, net.source_side(u));
  require(w.value == flow, ErrKind::InternalInvariantViolation, "Menger duality violated");
  return {flow, std::move(w)};
}

template <typename G>
long long local_capped_impl(const G& g, int u, int v, long long cap) {
  require(u != v, ErrKind::SameVertex, "lambda(u,v) needs distinct vertices");
  FlowNet net = build_net(g);
  return net.max_flow(u, v, cap);
}

// Progressive scan keeping the first witness that strictly improves the
// running minimum; flows are cut off at the current best, which cannot
// change the result or the chosen witness.
template <typename G, bool directed>
std::pair<long long, CutWitness> global_lambda_impl(const G& g) {
  require(g.n >= 2, ErrKind::TooSmall, "connectivity needs at least 2 vertices");
  long long best = kNoCap;
  CutWitness best_witness;
  auto probe = [&](int s, int t) {
    if (best == 0) return;
    FlowNet net = build_net(g);
    long long flow = net.max_flow(s, t, best);
    if (flow < best) {
      best = flow;
      best_witness = witness_from_side(g, net.source_side(s));
      require(best_witness.value == flow, ErrKind::InternalInvariantViolation,
              "Menger duality violated");
    }
  };
  for (int v = 1; v < g.n; ++v) {
    probe(0, v);
    if (directed) probe(v, 0);
  }
  return {best, std::move(best_witness)};
}

}  // namespace

CutWitness make_cut_witness(const Graph& g, const std::vector<int>& side_x) {
  std::vector<char> side(g.n, 0);
  for (int v : side_x) side[v] = 1;
  return witness_from_side(g, side);
}

CutWitness make_cut_witness(const Digraph& d, const std::vector<int>& side_x) {
  std::vector<char> side(d.n, 0);
  for (int v : side_x) side[v] = 1;
  return witness_from_side(d, side);
}

std::pair<long long, CutWitness> local_lambda(const Graph& g, int u, int v) {
  return local_lambda_impl(g, u, v);
}
std::pair<long long, CutWitness> local_lambda(const Digraph& d, int u, int v) {
  return local_lambda_impl(d, u, v);
}

long long local_lambda_capped(const Graph& g, int u, int v, long long cap) {
  return local_capped_impl(g, u, v, cap);
}
long long local_lambda_capped(const Digraph& d, int u, int v, long long cap) {
  return local_capped_impl(d, u, v, cap);
}

std::pair<long long, CutWitness> global_lambda(const Graph& g) {
  return global_lambda_impl<Graph, false>(g);
}
std::pair<long long, CutWitness> global_lambda(const Digraph& d) {
  return global_lambda_impl<Digraph, true>(d);
}

bool lambda_at_least(const Graph& g, long long k) {
  if (k <= 0) return true;
  if (g.n < 2) return false;
  for (int v = 1; v < g.n; ++v)
    if (local_lambda_capped(g, 0, v, k) < k) return false;
  return true;
}

bool lambda_at_least(const Digraph& d, long long k) {
  if (k <= 0) return true;
  if (d.n < 2) return false;
  for (int v = 1; v < d.n; ++v) {
    if (local_lambda_capped(d, 0, v, k) < k) return false;
    if (local_lambda_capped(d, v, 0, k) < k) return false;
  }
  return true;
}

bool lambda_at_least_excluding(const Digraph& d, long long k, int excluded) {
  if (k <= 0) return true;
  std::vector<int> others;
  for (int v = 0; v < d.n; ++v)
    if (v != excluded) others.push_back(v);
  if (others.size() < 2) return true;
  int root = others[0];
  for (std::size_t i = 1; i < others.size(); ++i) {
    if (local_lambda_capped(d, root, others[i], k) < k) return false;
    if (local_lambda_capped(d, others[i], root, k) < k) return false;
  }
  return true;
}

std::pair<long long, std::optional<CutWitness>> essential_lambda(const Graph& g) {
  require(g.n >= 4, ErrKind::PreconditionFailed, "essential connectivity needs >= 4 vertices");
  require(is_connected(g), ErrKind::Disconnected, "essential connectivity needs a connected graph");

  long long best = kNoCap;
  std::optional<CutWitness> best_witness;
  // Contract {a,b} -> s and {c,d} -> t; a maximum s-t flow minimizes d(X)
  // over X containing both a,b and avoiding both c,d. Every non-trivial cut
  // is hit by some choice of the two seed pairs.
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c) {
        if (c == a || c == b) continue;
        for (int d = c + 1; d < g.n; ++d) {
          if (d == a || d == b) continue;
          if (best == 0) break;
          std::vector<int> map(g.n);
          int next = 2;  // 0 = s, 1 = t
          for (int v = 0; v < g.n; ++v) {
            if (v == a || v == b)
              map[v] = 0;
            else if (v == c || v == d)
              map[v] = 1;
            else
              map[v] = next++;
          }
          FlowNet net(next);
          for (const Graph::Edge& e : g.edges) {
            int mu = map[e.u], mv = map[e.v];
            if (mu != mv) net.add(mu, mv, 1, 1);
          }
          long long flow = net.max_flow(0, 1, best);
          if (flow < best) {
            best = flow;
            std::vector<char> contracted_side = net.source_side(0);
            std::vector<char> side(g.n, 0);
            for (int v = 0; v < g.n; ++v) side[v] = contracted_side[map[v]];
            CutWitness w = witness_from_side(g, side);
            require(w.value == flow, ErrKind::InternalInvariantViolation,
                    "essential cut value mismatch");
            best_witness = std::move(w);
          }
        }
      }
  return {best, std::move(best_witness)};
}

namespace {

// Iterative Tarjan; emits components in reverse topological order.
std::vector<std::vector<int>> tarjan_components(const Digraph& d) {
  auto adj = d.out_adjacency();
  int n = d.n;
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < adj[f.v].size()) {
        int w = adj[f.v][f.edge].first;
        ++f.edge;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == index[v]) {
          std::vector<int> component;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = static_cast<int>(components.size());
            component.push_back(w);
            if (w == v) break;
          }
          std::sort(component.begin(), component.end());
          components.push_back(std::move(component));
        }
      }
    }
  }
  return components;
}

}  // namespace

bool is_strong(const Digraph& d) {
  if (d.n <= 1) return true;
  return strong_components(d).size() == 1;
}

std::vector<std::vector<int>> strong_components(const Digraph& d) {
  auto components = tarjan_components(d);
  std::reverse(components.begin(), components.end());
  return components;
}

std::vector<std::vector<int>> terminal_components(const Digraph& d) {
  auto components = strong_components(d);
  std::vector<int> comp_of(d.n, -1);
  for (std::size_t c = 0; c < components.size(); ++c)
    for (int v : components[c]) comp_of[v] = static_cast<int>(c);
  std::vector<char> has_out(components.size(), 0);
  for (const Digraph::Arc& a : d.arcs)
    if (comp_of[a.tail] != comp_of[a.head]) has_out[comp_of[a.tail]] = 1;
  std::vector<std::vector<int>> terminal;
  for (std::size_t c = 0; c < components.size(); ++c)
    if (!has_out[c]) terminal.push_back(components[c]);
  return terminal;
}

bool is_k_strong(const Digraph& d, int k) {
  require(k >= 1, ErrKind::BadParameters, "k-strong needs k >= 1");
  if (d.n < k + 1) return false;
  if (!is_strong(d)) return false;
  if (k == 1) return true;

  std::vector<std::vector<char>> arc(d.n, std::vector<char>(d.n, 0));
  for (const Digraph::Arc& a : d.arcs) arc[a.tail][a.head] = 1;

  // Vertex split: w -> (w_in = 2w, w_out = 2w+1) with unit capacity. The
  // network is built once and its capacities reset between pairs.
  FlowNet net(2 * d.n);
  for (int w = 0; w < d.n; ++w) net.add(2 * w, 2 * w + 1, 1, 0);
  for (const Digraph::Arc& a : d.arcs) net.add(2 * a.tail + 1, 2 * a.head, 1, 0);
  const std::vector<FlowNet::Half> baseline = net.halves;

  for (int u = 0; u < d.n; ++u)
    for (int v = 0; v < d.n; ++v) {
      if (u == v || arc[u][v]) continue;
      net.halves = baseline;
      if (net.max_flow(2 * u + 1, 2 * v, k) < k) return false;
    }
  return true;
}

}  // namespace spansub
