#include "spansub/gallery.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "spansub/connectivity.hpp"
#include "spansub/tree_packing.hpp"

namespace spansub {

namespace {

std::vector<std::vector<int>> k_subsets(const std::vector<int>& items, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      out.push_back(pick);
      return;
    }
    for (int i = start; i <= static_cast<int>(items.size()) - (k - depth); ++i) {
      pick[depth] = items[i];
      rec(i + 1, depth + 1);
    }
  };
  if (k <= static_cast<int>(items.size())) rec(0, 0);
  return out;
}

}  // namespace

Digraph rotative_tournament(int k) {
  require(k >= 1, ErrKind::BadParameters, "k must be positive");
  return cycle_power_digraph(2 * k + 1, k);
}

Digraph dkr(int k, int r) {
  require(k >= 1 && r >= k + 1, ErrKind::BadParameters, "need k >= 1 and r >= k+1");
  int copy = 2 * k + 1;
  Digraph d(r * copy);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < copy; ++j)
      for (int t = 1; t <= k; ++t) d.add_arc(i * copy + j, i * copy + (j + t) % copy);
  for (int i = 0; i < r; ++i)
    for (int t = 1; t <= k; ++t) d.add_arc(i * copy, ((i + t) % r) * copy);
  auto [lambda, witness] = global_lambda(d);
  require(lambda == k, ErrKind::InternalInvariantViolation, "D_{k,r} must have arc-connectivity k");
  return d;
}

int dkr_refuter(int k, int r, const Partition& p) {
  require(p.part_count <= 2 * k, ErrKind::PreconditionFailed,
          "refuter applies to partitions into at most 2k parts");
  int copy = 2 * k + 1;
  require(p.size() == r * copy, ErrKind::PartitionMismatch, "partition size mismatch");
  // Non-hub vertices of the first copy have all arcs inside it, so a
  // same-part neighbour there certifies a semi-degree deficit.
  for (int j = 1; j < copy; ++j) {
    int out_crossing = 0, in_crossing = 0;
    for (int t = 1; t <= k; ++t) {
      if (p.part_of[(j + t) % copy] != p.part_of[j]) ++out_crossing;
      if (p.part_of[(j - t + copy) % copy] != p.part_of[j]) ++in_crossing;
    }
    if (out_crossing < k || in_crossing < k) return j;
  }
  fail(ErrKind::NoViolation, "no violating vertex found; partition cannot have <= 2k parts");
}

const std::vector<std::string>& exceptional_names() {
  static const std::vector<std::string> names = {"C3",      "C_{3,1}", "T5",
                                                 "S_{5,1}", "S_{5,2}", "S_{5,3}"};
  return names;
}

std::vector<std::string> exceptional_labels(const std::string& name) {
  if (name == "C3") return {"u", "v", "w"};
  if (name == "C_{3,1}") return {"x", "y", "z"};
  if (name == "T5" || name == "S_{5,1}" || name == "S_{5,2}" || name == "S_{5,3}")
    return {"a", "b", "c", "d", "e"};
  fail(ErrKind::UnknownName, "unknown exceptional digraph " + name);
}

Digraph exceptional(const std::string& name) {
  if (name == "C3") {
    Digraph d(3);
    d.add_arc(0, 1);
    d.add_arc(1, 2);
    d.add_arc(2, 0);
    return d;
  }
  if (name == "C_{3,1}") {
    // vertices x,y,z = 0,1,2 with arcs xy, yz, yx, zx
    Digraph d(3);
    d.add_arc(0, 1);
    d.add_arc(1, 2);
    d.add_arc(1, 0);
    d.add_arc(2, 0);
    return d;
  }
  if (name == "T5" || name == "S_{5,1}" || name == "S_{5,2}" || name == "S_{5,3}") {
    // vertices a,b,c,d,e = 0..4; 3-cycle abca plus de, ad, bd, cd, ea, eb, ec
    Digraph d(5);
    d.add_arc(0, 1);
    d.add_arc(1, 2);
    d.add_arc(2, 0);
    d.add_arc(3, 4);
    d.add_arc(0, 3);
    d.add_arc(1, 3);
    d.add_arc(2, 3);
    d.add_arc(4, 0);
    d.add_arc(4, 1);
    d.add_arc(4, 2);
    if (name == "S_{5,1}") d.add_arc(4, 3);  // 2-cycle ded
    if (name == "S_{5,2}") d.add_arc(1, 4);  // 2-cycle beb
    if (name == "S_{5,3}") d.add_arc(3, 2);  // 2-cycle cdc
    return d;
  }
  fail(ErrKind::UnknownName, "unknown exceptional digraph " + name);
}

ClassDResult class_d(int k) {
  require(k >= 2, ErrKind::BadK,
          "k = 1 breaks the 2k-distinct-in-neighbour requirement; k >= 2 only");
  ClassDLayout layout;
  layout.k = k;

  int next = 0;
  for (int i = 0; i < 3 * k - 2; ++i) layout.v4.push_back(next++);
  layout.w_sets = k_subsets(layout.v4, k);

  for (std::size_t wi = 0; wi < layout.w_sets.size(); ++wi) {
    std::vector<int> rw;
    for (int i = 0; i < 2 * k - 1; ++i) rw.push_back(next++);
    layout.v3.insert(layout.v3.end(), rw.begin(), rw.end());
    layout.r_sets.push_back(std::move(rw));
  }
  layout.u_sets.resize(layout.w_sets.size());
  layout.s_sets.resize(layout.w_sets.size());
  layout.t_sets.resize(layout.w_sets.size());
  for (std::size_t wi = 0; wi < layout.w_sets.size(); ++wi) {
    layout.u_sets[wi] = k_subsets(layout.r_sets[wi], k);
    for (std::size_t ui = 0; ui < layout.u_sets[wi].size(); ++ui) {
      std::vector<int> s;
      for (int i = 0; i < k; ++i) s.push_back(next++);
      layout.v2.insert(layout.v2.end(), s.begin(), s.end());
      layout.s_sets[wi].push_back(std::move(s));
    }
  }
  for (std::size_t wi = 0; wi < layout.w_sets.size(); ++wi)
    for (std::size_t ui = 0; ui < layout.u_sets[wi].size(); ++ui) {
      std::vector<int> t;
      for (int i = 0; i < 2 * k; ++i) t.push_back(next++);
      layout.v1.insert(layout.v1.end(), t.begin(), t.end());
      layout.t_sets[wi].push_back(std::move(t));
    }

  Digraph d(next);
  for (std::size_t wi = 0; wi < layout.w_sets.size(); ++wi) {
    const std::vector<int>& w = layout.w_sets[wi];
    // complement of W inside V_4, round-robin source for degree top-ups
    std::vector<int> rest;
    for (int v : layout.v4)
      if (std::find(w.begin(), w.end(), v) == w.end()) rest.push_back(v);

    for (std::size_t ix = 0; ix < layout.r_sets[wi].size(); ++ix) {
      int x = layout.r_sets[wi][ix];
      for (int wv : w) d.add_arc(x, wv);
      for (int t = 0; t < k; ++t)
        d.add_arc(x, rest[(ix + t) % rest.size()]);  // out-degree exactly 2k
    }
    for (std::size_t ui = 0; ui < layout.u_sets[wi].size(); ++ui) {
      const std::vector<int>& u = layout.u_sets[wi][ui];
      for (int s : layout.s_sets[wi][ui]) {
        for (int wv : w) d.add_arc(s, wv);
        for (int uv : u) d.add_arc(s, uv);
      }
      for (std::size_t jt = 0; jt < layout.t_sets[wi][ui].size(); ++jt) {
        int t = layout.t_sets[wi][ui][jt];
        for (int s : layout.s_sets[wi][ui]) d.add_arc(t, s);
        for (int uv : u) d.add_arc(t, uv);
        for (int wv : w) d.add_arc(wv, t);
        for (int e = 0; e < k; ++e)
          d.add_arc(rest[(jt + e) % rest.size()], t);  // in-degree exactly 2k, sources avoid W
      }
    }
  }
  for (int v4 : layout.v4) {
    for (int v : layout.v2) d.add_arc(v4, v);
    for (int v : layout.v3) d.add_arc(v4, v);
  }

  // Degree contract from the construction.
  auto out = d.out_degrees();
  auto in = d.in_degrees();
  for (int v : layout.v1) {
    require(out[v] == 2 * k, ErrKind::InternalInvariantViolation, "V1 out-degree must be 2k");
    require(in[v] == 2 * k, ErrKind::InternalInvariantViolation, "V1 in-degree must be 2k");
  }
  for (int v : layout.v2) {
    require(out[v] == 2 * k, ErrKind::InternalInvariantViolation, "V2 out-degree must be 2k");
    require(in[v] == 5 * k - 2, ErrKind::InternalInvariantViolation, "V2 in-degree must be 5k-2");
  }
  for (int v : layout.v3)
    require(out[v] == 2 * k, ErrKind::InternalInvariantViolation, "V3 out-degree must be 2k");
  return {std::move(d), std::move(layout)};
}

int class_d_refuter(const ClassDLayout& layout, const Partition& p) {
  require(p.part_count <= 3, ErrKind::PreconditionFailed, "refuter applies to <= 3 parts");
  int k = layout.k;
  auto part = [&](int v) { return p.part_of[v]; };

  // Part holding at least k vertices of V_4 (pigeonhole, |V_4| = 3k-2).
  std::vector<std::vector<int>> by_part(3);
  for (int v : layout.v4) by_part[part(v)].push_back(v);
  int p1 = -1;
  for (int r = 0; r < 3; ++r)
    if (static_cast<int>(by_part[r].size()) >= k) {
      p1 = r;
      break;
    }
  require(p1 != -1, ErrKind::InternalInvariantViolation, "pigeonhole on V_4 failed");
  std::vector<int> w(by_part[p1].begin(), by_part[p1].begin() + k);

  auto wi_it = std::find(layout.w_sets.begin(), layout.w_sets.end(), w);
  require(wi_it != layout.w_sets.end(), ErrKind::InternalInvariantViolation, "W subset not enumerated");
  std::size_t wi = static_cast<std::size_t>(wi_it - layout.w_sets.begin());

  // Any R_W vertex in P_1 has its k W-arcs inside its own part.
  for (int x : layout.r_sets[wi])
    if (part(x) == p1) return x;

  // R_W sits in the other two parts; one of them holds a k-subset U.
  std::vector<std::vector<int>> r_by_part(3);
  for (int x : layout.r_sets[wi]) r_by_part[part(x)].push_back(x);
  int pa = -1;
  for (int r = 0; r < 3; ++r)
    if (r != p1 && static_cast<int>(r_by_part[r].size()) >= k) {
      pa = r;
      break;
    }
  require(pa != -1, ErrKind::InternalInvariantViolation, "pigeonhole on R_W failed");
  std::vector<int> u(r_by_part[pa].begin(), r_by_part[pa].begin() + k);

  auto ui_it = std::find(layout.u_sets[wi].begin(), layout.u_sets[wi].end(), u);
  require(ui_it != layout.u_sets[wi].end(), ErrKind::InternalInvariantViolation,
          "U subset not enumerated");
  std::size_t ui = static_cast<std::size_t>(ui_it - layout.u_sets[wi].begin());

  // S_{W,U} sends k arcs to W (in P_1) and k arcs to U (in P_a).
  for (int s : layout.s_sets[wi][ui])
    if (part(s) == p1 || part(s) == pa) return s;

  // All of S_{W,U} is in the third part; T_{W,U} sends k arcs to each of the
  // other two parts and receives k arcs from W, so wherever t lies it is
  // deficient in one direction.
  int pb = 3 - p1 - pa;
  for (int t : layout.t_sets[wi][ui])
    if (part(t) == pa || part(t) == pb) return t;
  // every t sits in P_1 together with W, short of in-neighbours outside it
  return layout.t_sets[wi][ui][0];
}

Graph essentially_6ec_bipartite(int n) {
  require(n >= 16 && n % 16 == 0, ErrKind::BadN, "n must be a positive multiple of 16");
  int m = 3 * n / 8;  // prism cycle length, even
  int p = n / 4;      // Moebius ladder size, even

  // H = circular ladder (prism) on 2m = 3n/4 vertices: o_j = j, i_j = m + j.
  Graph h(2 * m);
  for (int j = 0; j < m; ++j) {
    h.add_edge(j, (j + 1) % m);
    h.add_edge(m + j, m + (j + 1) % m);
    h.add_edge(j, m + j);
  }
  // L = Moebius ladder on p vertices (K4 when p = 4).
  Graph l(p);
  for (int j = 0; j < p; ++j) l.add_edge(j, (j + 1) % p);
  for (int j = 0; j < p / 2; ++j) l.add_edge(j, j + p / 2);

  require(essential_lambda(h).first >= 4, ErrKind::BuildingBlockRejected,
          "prism block is not essentially 4-edge-connected");
  require(essential_lambda(l).first >= 4, ErrKind::BuildingBlockRejected,
          "cubic block is not essentially 4-edge-connected");

  // A = one partite class of H: o_j for even j, i_j for odd j.
  std::vector<int> a_side;
  for (int j = 0; j < m; ++j) {
    if (j % 2 == 0) a_side.push_back(j);
    if (j % 2 == 1) a_side.push_back(m + j);
  }
  std::sort(a_side.begin(), a_side.end());
  require(static_cast<int>(a_side.size()) == l.edge_count(), ErrKind::InternalInvariantViolation,
          "subdivision vertices must match the A side one-to-one");

  // G = H plus the subdivided L, the subdivision vertex of L-edge e
  // identified with a_side[e].
  Graph g(2 * m + p);
  for (const Graph::Edge& e : h.edges) g.add_edge(e.u, e.v);
  for (int e = 0; e < l.edge_count(); ++e) {
    int sub = a_side[e];
    g.add_edge(2 * m + l.edges[e].u, sub);
    g.add_edge(2 * m + l.edges[e].v, sub);
  }

  // (3,5)-regular bipartite check.
  std::vector<int> deg = g.degrees();
  std::vector<char> in_a(g.n, 0);
  for (int v : a_side) in_a[v] = 1;
  for (int v = 0; v < g.n; ++v)
    require(deg[v] == (in_a[v] ? 5 : 3), ErrKind::InternalInvariantViolation,
            "degrees must be 5 on A and 3 on B");
  for (const Graph::Edge& e : g.edges)
    require(in_a[e.u] != in_a[e.v], ErrKind::InternalInvariantViolation, "graph must be bipartite");

  require(essential_lambda(g).first >= 6, ErrKind::InternalInvariantViolation,
          "composed graph must be essentially 6-edge-connected");
  return g;
}

NoBip2TResult no_bip2t_example(int n) {
  Graph g = essentially_6ec_bipartite(n);
  Graph h = line_graph(g);
  std::vector<int> deg = h.degrees();
  for (int v = 0; v < h.n; ++v)
    require(deg[v] == 6, ErrKind::InternalInvariantViolation, "line graph must be 6-regular");
  require(global_lambda(h).first == 6, ErrKind::InternalInvariantViolation,
          "line graph must be 6-edge-connected");

  NoBip2TResult result;
  long long clique_edges = 0;
  for (int d : g.degrees()) {
    if (d == 3) ++result.triangles;
    if (d == 5) ++result.k5_cliques;
    clique_edges += static_cast<long long>(d) * (d - 1) / 2;
  }
  require(clique_edges == h.edge_count(), ErrKind::InternalInvariantViolation,
          "vertex cliques must edge-partition the line graph");
  result.cut_bound = 2 * result.triangles + 6 * result.k5_cliques;
  require(result.cut_bound < 2LL * h.n - 2, ErrKind::InternalInvariantViolation,
          "cut bound must forbid spanning bipartite 2T-subgraphs");
  result.graph = std::move(h);
  return result;
}

std::vector<std::vector<int>> walecki_paths(int r) {
  require(r >= 1, ErrKind::BadParameters, "r must be positive");
  int n = 2 * r;
  // zigzag base path 0, 1, 2r-1, 2, 2r-2, ... rotated r times
  std::vector<int> base(n);
  base[0] = 0;
  for (int j = 1; j < n; ++j) base[j] = (j % 2 == 1) ? (j + 1) / 2 : n - j / 2;
  std::vector<std::vector<int>> paths;
  for (int i = 0; i < r; ++i) {
    std::vector<int> path(n);
    for (int j = 0; j < n; ++j) path[j] = (base[j] + i) % n;
    paths.push_back(std::move(path));
  }
  // validation: edge-disjoint and the union is exactly K_{2r}
  std::map<std::pair<int, int>, int> used;
  for (const auto& path : paths)
    for (int j = 0; j + 1 < n; ++j) {
      auto key = std::minmax(path[j], path[j + 1]);
      ++used[{key.first, key.second}];
    }
  require(static_cast<long long>(used.size()) == static_cast<long long>(n) * (n - 1) / 2,
          ErrKind::InternalInvariantViolation, "paths must cover every edge of K_{2r}");
  for (const auto& [key, count] : used)
    require(count == 1, ErrKind::InternalInvariantViolation, "paths must be edge-disjoint");
  return paths;
}

Graph odd_wheel(int m) {
  require(m >= 7 && m % 2 == 1, ErrKind::BadParameters, "rim length must be odd and >= 7");
  Graph g(m + 1);
  for (int j = 0; j < m; ++j) {
    g.add_edge(j, (j + 1) % m);
    g.add_edge(j, m);
  }
  return g;
}

Graph kt_chromatic_2k(int k, const Graph& host) {
  require(k >= 1, ErrKind::BadParameters, "k must be positive");
  require(host.n >= 1, ErrKind::BadParameters, "host must be non-empty");
  try {
    tree_pack(host, k);
  } catch (const NoPackingError&) {
    fail(ErrKind::HostNotKT, "host graph does not decompose into k spanning trees");
  }
  std::vector<std::vector<int>> paths = walecki_paths(k);
  Graph g(host.n + 2 * k);
  for (const Graph::Edge& e : host.edges) g.add_edge(e.u, e.v);
  for (int x = 0; x < 2 * k; ++x)
    for (int y = x + 1; y < 2 * k; ++y) g.add_edge(host.n + x, host.n + y);
  for (int i = 0; i < k; ++i) g.add_edge(i % host.n, host.n + paths[i][0]);
  require(validate_packing(g, tree_pack(g, k), k), ErrKind::InternalInvariantViolation,
          "joined graph must again be a kT-graph");
  return g;
}

}  // namespace spansub
