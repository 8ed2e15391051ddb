#include <doctest.h>

#include "spansub/connectivity.hpp"
#include "spansub/gallery.hpp"
#include "spansub/mader.hpp"
#include "spansub/oracle.hpp"
#include "spansub/randgen.hpp"
#include "spansub/tournament.hpp"
#include "spansub/tree_packing.hpp"
#include "testutil.hpp"

using namespace spansub;

TEST_CASE("rotative tournaments") {
  CHECK(rotative_tournament(1) == testutil::directed_cycle(3));
  Digraph r5 = rotative_tournament(2);
  auto out = r5.out_degrees();
  auto in = r5.in_degrees();
  for (int v = 0; v < 5; ++v) {
    CHECK(out[v] == 2);
    CHECK(in[v] == 2);
  }
  CHECK(is_k_strong(rotative_tournament(3), 3));
}

TEST_CASE("the D_{k,r} family") {
  Digraph d12 = dkr(1, 2);
  CHECK(d12.n == 6);
  CHECK(d12.has_arc(0, 3));  // hub 2-cycle
  CHECK(d12.has_arc(3, 0));
  CHECK(global_lambda(d12).first == 1);

  Digraph d25 = dkr(2, 5);
  CHECK(d25.n == 25);
  CHECK(global_lambda(d25).first == 2);

  CHECK(global_lambda(dkr(3, 4)).first == 3);
  CHECK_THROWS_AS(dkr(2, 2), Error);  // needs r >= k+1

  // hub subdigraph equals the k-th cycle power exactly
  Digraph hubs(5);
  for (const Digraph::Arc& a : d25.arcs)
    if (a.tail % 5 == 0 && a.head % 5 == 0) hubs.add_arc(a.tail / 5, a.head / 5);
  Digraph power = cycle_power_digraph(5, 2);
  CHECK(arc_multiset_subset(hubs, power));
  CHECK(arc_multiset_subset(power, hubs));
}

TEST_CASE("the D_{k,r} refuter") {
  // everything in one part: any copy-1 vertex violates
  Partition mono(std::vector<int>(6, 0), 1);
  int v = dkr_refuter(1, 2, mono);
  CHECK(v >= 1);
  CHECK(v <= 2);

  Rng rng(127);
  for (int trial = 0; trial < 2000; ++trial) {
    Partition p = random_partition(rng, 25, 4);
    int violator = dkr_refuter(2, 5, p);
    int out_crossing = 0, in_crossing = 0;
    for (int t = 1; t <= 2; ++t) {
      if (p.part_of[(violator + t) % 5] != p.part_of[violator]) ++out_crossing;
      if (p.part_of[(violator - t + 5) % 5] != p.part_of[violator]) ++in_crossing;
    }
    CHECK((out_crossing < 2 || in_crossing < 2));
  }

  // more parts than 2k is out of contract
  CHECK_THROWS_AS(dkr_refuter(1, 2, Partition(std::vector<int>(6, 0), 3)), Error);
}

TEST_CASE("exceptional digraphs") {
  Digraph t5 = exceptional("T5");
  CHECK(t5.n == 5);
  CHECK(t5.arc_count() == 10);
  CHECK(is_tournament(t5));

  Digraph c31 = exceptional("C_{3,1}");
  CHECK(c31.arc_count() == 4);
  CHECK(c31.has_arc(0, 1));
  CHECK(c31.has_arc(1, 0));
  CHECK(c31.has_arc(1, 2));
  CHECK(c31.has_arc(2, 0));

  Digraph s51 = exceptional("S_{5,1}");
  CHECK(s51.arc_count() == 11);
  CHECK(s51.has_arc(4, 3));  // the ded 2-cycle

  // Exhaustive sweeps over all semicomplete digraphs on 3 and 5 vertices:
  // exactly these four admit no spanning strong bipartite subdigraph.
  for (const std::string& name : {"C3", "C_{3,1}", "T5", "S_{5,1}"})
    CHECK_FALSE(exists_strong_bipartite(exceptional(name)).found);
  // The other two named digraphs do admit one.
  CHECK(exists_strong_bipartite(exceptional("S_{5,2}")).found);
  CHECK(exists_strong_bipartite(exceptional("S_{5,3}")).found);
}

TEST_CASE("class D construction at k = 2") {
  static ClassDResult res = class_d(2);
  const ClassDLayout& layout = res.layout;
  CHECK(layout.v4.size() == 4);
  CHECK(layout.v3.size() == 18);
  CHECK(layout.v2.size() == 36);
  CHECK(layout.v1.size() == 72);
  CHECK(res.digraph.n == 130);

  auto out = res.digraph.out_degrees();
  auto in = res.digraph.in_degrees();
  for (int v : layout.v1) {
    CHECK(out[v] == 4);
    CHECK(in[v] == 4);
  }
  for (int v : layout.v2) {
    CHECK(out[v] == 4);
    CHECK(in[v] == 8);  // 5k-2
  }
  for (int v : layout.v3) CHECK(out[v] == 4);

  CHECK_THROWS_AS(class_d(1), Error);
}

TEST_CASE("class D refuter replays the proof chain") {
  static ClassDResult res = class_d(2);
  const Digraph& d = res.digraph;
  const ClassDLayout& layout = res.layout;

  // monochrome partition: some V_3 vertex has no crossing out-arc
  Partition mono(std::vector<int>(d.n, 0), 1);
  int v = class_d_refuter(layout, mono);
  CHECK(crossing_out_degree(d, mono, v) == 0);

  // strata-aligned partition V_4 | V_3 | V_2 u V_1: a T_{W,U} vertex falls
  std::vector<int> assign(d.n, 2);
  for (int x : layout.v4) assign[x] = 0;
  for (int x : layout.v3) assign[x] = 1;
  Partition strata(assign, 3);
  int t = class_d_refuter(layout, strata);
  bool deficient = crossing_out_degree(d, strata, t) <= 2 || crossing_in_degree(d, strata, t) <= 2;
  CHECK(deficient);

  Rng rng(131);
  for (int trial = 0; trial < 2000; ++trial) {
    Partition p = random_partition(rng, d.n, 3);
    int violator = class_d_refuter(layout, p);
    CHECK((crossing_out_degree(d, p, violator) <= 2 || crossing_in_degree(d, p, violator) <= 2));
  }
}

TEST_CASE("essentially 6-edge-connected bipartite graphs") {
  Graph g16 = essentially_6ec_bipartite(16);
  CHECK(g16.n == 16);
  std::vector<int> deg = g16.degrees();
  int deg3 = 0, deg5 = 0;
  for (int d : deg) {
    if (d == 3) ++deg3;
    if (d == 5) ++deg5;
  }
  CHECK(deg5 == 6);
  CHECK(deg3 == 10);
  CHECK(essential_lambda(g16).first >= 6);
  CHECK_THROWS_AS(essentially_6ec_bipartite(12), Error);
}

TEST_CASE("line graphs without bipartite 2T-subgraphs") {
  NoBip2TResult res = no_bip2t_example(16);
  CHECK(res.graph.n == 30);
  for (int d : res.graph.degrees()) CHECK(d == 6);
  CHECK(global_lambda(res.graph).first == 6);
  CHECK(res.triangles == 10);
  CHECK(res.k5_cliques == 6);
  CHECK(res.cut_bound == 56);
  CHECK(res.cut_bound < 2 * res.graph.n - 2);
}

TEST_CASE("walecki path decompositions") {
  auto p2 = walecki_paths(2);
  CHECK(p2.size() == 2);
  for (const auto& path : p2) CHECK(path.size() == 4);
  for (int r = 2; r <= 5; ++r) {
    auto paths = walecki_paths(r);
    CHECK(paths.size() == static_cast<std::size_t>(r));
  }
}

TEST_CASE("odd wheels and the kT join") {
  Graph w7 = odd_wheel(7);
  CHECK(w7.n == 8);
  CHECK(validate_packing(w7, tree_pack(w7, 2), 2));
  CHECK(chromatic_number(w7) == 4);
  CHECK_THROWS_AS(odd_wheel(6), Error);
  CHECK_THROWS_AS(odd_wheel(5), Error);

  Graph joined = kt_chromatic_2k(2, w7);
  CHECK(joined.n == 12);
  CHECK(validate_packing(joined, tree_pack(joined, 2), 2));
  CHECK(chromatic_number(joined) == 4);

  Graph not_kt = testutil::cycle_graph(5);
  CHECK_THROWS_AS(kt_chromatic_2k(2, not_kt), Error);
}
