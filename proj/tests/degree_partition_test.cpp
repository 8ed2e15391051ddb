#include <doctest.h>

#include "spansub/degree_partition.hpp"
#include "spansub/gallery.hpp"
#include "spansub/oracle.hpp"
#include "spansub/randgen.hpp"
#include "testutil.hpp"

using namespace spansub;

TEST_CASE("weight matrix invariants") {
  std::vector<std::vector<Rational>> ok(2, std::vector<Rational>(2, 0));
  ok[0][1] = Rational(1, 2);
  CHECK_NOTHROW(WeightMatrix(ok, {Rational(1, 2), Rational(1, 2)}));

  std::vector<std::vector<Rational>> bad_diag(2, std::vector<Rational>(2, 0));
  bad_diag[0][0] = 1;
  CHECK_THROWS_AS(WeightMatrix(bad_diag, {Rational(1)}), Error);

  std::vector<std::vector<Rational>> bad_row(2, std::vector<Rational>(2, 0));
  bad_row[0][1] = 2;
  CHECK_THROWS_AS(WeightMatrix(bad_row, {Rational(1)}), Error);

  std::vector<std::vector<Rational>> zeros(2, std::vector<Rational>(2, 0));
  CHECK_THROWS_AS(WeightMatrix(zeros, {Rational(1, 2)}), Error);  // weights must sum to 1
}

TEST_CASE("alon partition on toy matrices") {
  // zero matrix: everything in one part is already valid
  std::vector<std::vector<Rational>> zeros(4, std::vector<Rational>(4, 0));
  WeightMatrix zero_m(zeros, {Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  Partition all_one(std::vector<int>(4, 0), 3);
  CHECK_FALSE(alon_violation(zero_m, all_one).has_value());
  CHECK_FALSE(alon_violation(zero_m, alon_partition(zero_m)).has_value());

  // n = 2 with a_12 = a_21 = 1 forces separation
  std::vector<std::vector<Rational>> pairm(2, std::vector<Rational>(2, 0));
  pairm[0][1] = 1;
  pairm[1][0] = 1;
  WeightMatrix m(pairm, {Rational(1, 2), Rational(1, 2)});
  Partition p = alon_partition(m);
  CHECK(p.part_of[0] != p.part_of[1]);
}

TEST_CASE("alon partition on the directed 5-cycle matrix") {
  // out-degree reciprocals of C5, t = 3: within row sums at most 2/3 force a
  // partition where every vertex's successor leaves its part
  Digraph c5 = testutil::directed_cycle(5);
  std::vector<std::vector<Rational>> entries(5, std::vector<Rational>(5, 0));
  for (const Digraph::Arc& a : c5.arcs) entries[a.tail][a.head] = 1;  // 1/d+ = 1
  WeightMatrix m(entries, {Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  Partition p = alon_partition(m);
  CHECK_FALSE(alon_violation(m, p).has_value());
  for (const Digraph::Arc& a : c5.arcs) CHECK(p.part_of[a.tail] != p.part_of[a.head]);

  // exhaustive cross-check over all 3^5 assignments
  long long valid = 0;
  std::vector<int> assign(5, 0);
  while (true) {
    if (!alon_violation(m, Partition(assign, 3)).has_value()) ++valid;
    int pos = 4;
    while (pos >= 0 && assign[pos] == 2) assign[pos--] = 0;
    if (pos < 0) break;
    ++assign[pos];
  }
  CHECK(valid > 0);
}

TEST_CASE("majority 4-colouring") {
  Digraph arcless(6);
  std::vector<int> c = majority_4_colouring(arcless);
  for (int v = 0; v < 6; ++v) CHECK(c[v] == c[0]);

  CHECK(majority_colouring_valid(testutil::directed_cycle(3),
                                 majority_4_colouring(testutil::directed_cycle(3))));

  // transitive tournament
  Digraph tt5(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) tt5.add_arc(u, v);
  CHECK(majority_colouring_valid(tt5, majority_4_colouring(tt5)));

  Rng rng(107);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + rng.below_int(40);
    Digraph d = random_digraph(rng, n, rng.below_int(4 * n + 1));
    std::vector<int> colour = majority_4_colouring(d);
    CHECK(*std::max_element(colour.begin(), colour.end()) <= 3);
    CHECK(majority_colouring_valid(d, colour));
  }
}

TEST_CASE("three-way partition keeps degree thirds") {
  // X = V on the directed 6-cycle: every vertex keeps its single out-arc
  Digraph c6 = testutil::directed_cycle(6);
  std::vector<int> all = {0, 1, 2, 3, 4, 5};
  DegreePartitionResult res = three_partition_out_in(c6, all, {});
  auto out = res.subdigraph.out_degrees();
  for (int v = 0; v < 6; ++v) CHECK(out[v] >= 1);

  // Y = V on the transitive tournament keeps in-degree thirds
  Digraph tt4(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) tt4.add_arc(u, v);
  DegreePartitionResult res_in = three_partition_out_in(tt4, {}, {0, 1, 2, 3});
  auto in = res_in.subdigraph.in_degrees();
  auto host_in = tt4.in_degrees();
  for (int v = 0; v < 4; ++v) CHECK(3 * in[v] >= host_in[v]);

  // R_5 with X = V: at least ceil(2/3) = 1 out-arc survives everywhere
  Digraph r5 = rotative_tournament(2);
  DegreePartitionResult res_r5 = three_partition_out_in(r5, {0, 1, 2, 3, 4}, {});
  auto r5_out = res_r5.subdigraph.out_degrees();
  for (int v = 0; v < 5; ++v) CHECK(r5_out[v] >= 1);
}

TEST_CASE("k-partite semi-degree bound") {
  // complete biorientation of K6 at k = 6 keeps at least a third of 5
  Digraph bk6 = testutil::biorientation(testutil::complete_graph(6));
  DegreePartitionResult res = kpartite_semidegree(bk6, 6);
  auto out = res.subdigraph.out_degrees();
  auto in = res.subdigraph.in_degrees();
  for (int v = 0; v < 6; ++v) CHECK(std::min(out[v], in[v]) >= 2);

  // arcless digraph: anything goes
  DegreePartitionResult arcless = kpartite_semidegree(Digraph(4), 5);
  CHECK(arcless.partition.part_count == 5);

  CHECK_THROWS_AS(kpartite_semidegree(bk6, 4), Error);
}

TEST_CASE("semi-degree corollary at k = 6") {
  Rng rng(109);
  for (int r = 1; r <= 2; ++r) {
    int n = 6 * r + 3;
    Digraph d = pad_min_semidegree(rng, random_digraph(rng, n, 3 * r * n), 3 * r);
    DegreePartitionResult res = kpartite_semidegree(d, 6);
    auto out = res.subdigraph.out_degrees();
    auto in = res.subdigraph.in_degrees();
    for (int v = 0; v < n; ++v) CHECK(std::min(out[v], in[v]) >= r);
  }
}

TEST_CASE("deciding 2k-partite min-out-degree") {
  // a k-regular tournament is its own terminal component
  MinDegDecision r5 = decide_2k_partite_mindeg(rotative_tournament(2), 2);
  CHECK_FALSE(r5.possible);
  CHECK(r5.offending_component.size() == 5);

  // adding a fed vertex makes the terminal component the whole digraph
  Digraph d(6);
  for (const Digraph::Arc& a : rotative_tournament(2).arcs) d.add_arc(a.tail, a.head);
  for (int v = 0; v < 5; ++v) d.add_arc(5, v);
  d.add_arc(0, 5);
  MinDegDecision fed = decide_2k_partite_mindeg(d, 2);
  CHECK(fed.possible);

  // two R_3 copies, all arcs into the second: the terminal copy refuses
  Digraph two(6);
  for (const Digraph::Arc& a : rotative_tournament(1).arcs) {
    two.add_arc(a.tail, a.head);
    two.add_arc(a.tail + 3, a.head + 3);
  }
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) two.add_arc(u, v);
  MinDegDecision copies = decide_2k_partite_mindeg(two, 1);
  CHECK_FALSE(copies.possible);
  CHECK(copies.offending_component == std::vector<int>{3, 4, 5});

  CHECK_THROWS_AS(decide_2k_partite_mindeg(testutil::directed_path(3), 1), Error);
}

TEST_CASE("the tournament characterization is incomplete: frozen counterexample") {
  // A terminal directed 5-cycle blocks any 2-partition with min out-degree 1
  // (each vertex's unique out-arc must cross, 2-colouring an odd cycle), yet
  // it is not a 1-regular tournament. The decision procedure follows its
  // stated characterization and answers "possible"; the oracle knows better.
  Digraph c5 = testutil::directed_cycle(5);
  MinDegDecision decision = decide_2k_partite_mindeg(c5, 1);
  CHECK(decision.possible);  // per the implemented characterization
  SearchReport oracle = exists_partition_with(c5, 2, DegreePredicate::MinOutDegree, 1, 10);
  CHECK_FALSE(oracle.found);  // ground truth
}
