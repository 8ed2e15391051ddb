#include <doctest.h>

#include "spansub/gallery.hpp"
#include "spansub/mader.hpp"
#include "spansub/randgen.hpp"
#include "testutil.hpp"

using namespace spansub;

TEST_CASE("minimize arcs") {
  // ascending-id greedy on the biorientation of K3 settles on four arcs
  // through one centre vertex; every arc is essential afterwards
  Digraph bk3 = testutil::biorientation(testutil::complete_graph(3));
  Digraph min1 = minimize_arcs(bk3, 1);
  CHECK(min1.arc_count() == 4);
  CHECK(lambda_at_least(min1, 1));
  for (int drop = 0; drop < min1.arc_count(); ++drop) {
    Digraph less(min1.n);
    for (int id = 0; id < min1.arc_count(); ++id)
      if (id != drop) less.add_arc(min1.arcs[id].tail, min1.arcs[id].head);
    CHECK_FALSE(lambda_at_least(less, 1));
  }

  // R_5 is already minimally 2-arc-connected
  Digraph r5 = rotative_tournament(2);
  Digraph min2 = minimize_arcs(r5, 2);
  CHECK(min2.arc_count() == r5.arc_count());
  for (int drop = 0; drop < r5.arc_count(); ++drop) {
    Digraph less(r5.n);
    for (int id = 0; id < r5.arc_count(); ++id)
      if (id != drop) less.add_arc(r5.arcs[id].tail, r5.arcs[id].head);
    CHECK_FALSE(lambda_at_least(less, 2));
  }

  Digraph c4 = testutil::directed_cycle(4);
  CHECK(minimize_arcs(c4, 1) == c4);
  CHECK_THROWS_AS(minimize_arcs(c4, 2), Error);
}

TEST_CASE("find low vertex") {
  CHECK(find_low_vertex(testutil::directed_cycle(3), 1) == 0);
  CHECK(find_low_vertex(rotative_tournament(2), 2) == 0);
  CHECK(find_low_vertex(minimize_arcs(dkr(1, 2), 1), 1) >= 0);
}

TEST_CASE("splitting off a balanced vertex") {
  // path gadget inside a cycle: a->s, s->b becomes a->b
  Digraph cyc = testutil::directed_cycle(5);
  SplitResult res = split_off(cyc, 2, 1);
  CHECK(res.reduced.n == 4);
  CHECK(res.reduced.arc_count() == 4);
  CHECK(lambda_at_least(res.reduced, 1));
  CHECK(res.record.pairs == std::vector<std::pair<int, int>>{{1, 3}});

  // R_5 at vertex 0
  SplitResult r5 = split_off(rotative_tournament(2), 0, 2);
  CHECK(r5.reduced.n == 4);
  CHECK(lambda_at_least(r5.reduced, 2));
  for (auto [u, v] : r5.record.pairs) CHECK(u != v);  // no loops from pairing

  Digraph unbalanced(3);
  unbalanced.add_arc(0, 1);
  unbalanced.add_arc(1, 2);
  unbalanced.add_arc(2, 0);
  unbalanced.add_arc(0, 2);
  CHECK_THROWS_AS(split_off(unbalanced, 0, 1), Error);
}

TEST_CASE("split and lift replay on random inputs") {
  Rng rng(101);
  for (int trial = 0; trial < 15; ++trial) {
    int k = 1 + trial % 2;
    int n = k + 4 + rng.below_int(6);
    Digraph d = minimize_arcs(random_arc_connected_digraph(rng, n, k, rng.below_int(n)), k);
    int s = find_low_vertex(d, k);
    SplitResult res = split_off(d, s, k);
    // replay: drop created arcs, restore the pairs at s
    Digraph back(d.n);
    auto unshift = [&](int x) { return x < s ? x : x + 1; };
    std::vector<char> created(res.reduced.arc_count(), 0);
    for (int id : res.record.created_arcs) created[id] = 1;
    for (int id = 0; id < res.reduced.arc_count(); ++id)
      if (!created[id])
        back.add_arc(unshift(res.reduced.arcs[id].tail), unshift(res.reduced.arcs[id].head));
    for (auto [u, v] : res.record.pairs) {
      back.add_arc(u, s);
      back.add_arc(s, v);
    }
    CHECK(arc_multiset_subset(back, d));
    CHECK(arc_multiset_subset(d, back));
  }
}

TEST_CASE("spanning k-arc-connected partite subdigraphs") {
  // base case: rotative tournaments get singleton parts
  for (int k = 1; k <= 3; ++k) {
    KacPartiteResult res = spanning_kac_partite(rotative_tournament(k), k);
    CHECK(res.partition.part_count == 2 * k + 1);
    CHECK(res.subdigraph.arc_count() == rotative_tournament(k).arc_count());
  }

  KacPartiteResult d12 = spanning_kac_partite(dkr(1, 2), 1);
  CHECK(d12.partition.part_count <= 3);
  CHECK(is_strong(d12.subdigraph));
  CHECK(arc_multiset_subset(d12.subdigraph, dkr(1, 2)));

  KacPartiteResult d25 = spanning_kac_partite(dkr(2, 5), 2);
  CHECK(d25.partition.part_count <= 5);
  CHECK(lambda_at_least(d25.subdigraph, 2));
  CHECK(arc_multiset_subset(d25.subdigraph, dkr(2, 5)));

  CHECK_THROWS_AS(spanning_kac_partite(testutil::directed_path(4), 1), Error);
}

TEST_CASE("fast mode reaches the same contract") {
  Digraph d = dkr(1, 3);
  KacPartiteResult res = spanning_kac_partite(d, 1, /*fast=*/true);
  CHECK(res.partition.part_count <= 3);
  CHECK(lambda_at_least(res.subdigraph, 1));
  CHECK(arc_multiset_subset(res.subdigraph, d));
}

TEST_CASE("collapsing parallels keeps one arc per pair") {
  Digraph d(3);
  d.add_arc(0, 1);
  d.add_arc(0, 1);
  d.add_arc(1, 0);
  d.add_arc(1, 2);
  Digraph simple = collapse_parallel_arcs(d);
  CHECK(simple.arc_count() == 3);
}

TEST_CASE("random k-arc-connected digraphs stay k-arc-connected") {
  Rng rng(103);
  for (int trial = 0; trial < 8; ++trial) {
    int k = 1 + trial % 2;
    int n = 2 * k + 3 + rng.below_int(8);
    Digraph d = random_arc_connected_digraph(rng, n, k, rng.below_int(n + 1));
    KacPartiteResult res = spanning_kac_partite(d, k);
    CHECK(res.partition.part_count <= 2 * k + 1);
    CHECK(lambda_at_least(res.subdigraph, k));
    CHECK(arc_multiset_subset(res.subdigraph, d));
    for (const Digraph::Arc& a : res.subdigraph.arcs)
      CHECK(res.partition.part_of[a.tail] != res.partition.part_of[a.head]);
  }
}
