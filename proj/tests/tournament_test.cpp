#include <doctest.h>

#include "spansub/gallery.hpp"
#include "spansub/oracle.hpp"
#include "spansub/randgen.hpp"
#include "spansub/tournament.hpp"
#include "testutil.hpp"

using namespace spansub;

TEST_CASE("semicomplete and tournament predicates") {
  CHECK(is_tournament(rotative_tournament(2)));
  CHECK(is_semicomplete(exceptional("S_{5,1}")));
  CHECK_FALSE(is_tournament(exceptional("S_{5,1}")));
  CHECK_FALSE(is_semicomplete(testutil::directed_cycle(4)));
}

TEST_CASE("hamiltonian cycles of strong semicomplete digraphs") {
  CHECK(validate_ham_cycle(testutil::directed_cycle(3), hamiltonian_cycle(testutil::directed_cycle(3))));
  CHECK(validate_ham_cycle(rotative_tournament(2), hamiltonian_cycle(rotative_tournament(2))));
  CHECK(validate_ham_cycle(exceptional("T5"), hamiltonian_cycle(exceptional("T5"))));

  Rng rng(83);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + rng.below_int(10);
    Digraph s = random_strong_semicomplete(rng, n, rng.below_int(n));
    CHECK(validate_ham_cycle(s, hamiltonian_cycle(s)));
  }
  CHECK_THROWS_AS(hamiltonian_cycle(testutil::directed_path(3)), Error);
}

TEST_CASE("removable vertex") {
  // the unique strong 4-vertex tournament leaves a triangle behind
  Digraph t4(4);
  t4.add_arc(0, 1);
  t4.add_arc(1, 2);
  t4.add_arc(2, 0);
  t4.add_arc(0, 3);
  t4.add_arc(1, 3);
  t4.add_arc(3, 2);
  int z4 = removable_vertex(t4);
  std::vector<int> keep;
  for (int v = 0; v < 4; ++v)
    if (v != z4) keep.push_back(v);
  Digraph rest = induced_subdigraph(t4, keep);
  CHECK(is_strong(rest));
  CHECK(find_isomorphism(exceptional("C3"), rest).has_value());

  // T5: only a, b, c are removable (d's single out-arc and e's single
  // in-arc is the de arc), each with semi-degree 2; smallest id wins
  CHECK(removable_vertex(exceptional("T5")) == 0);

  // R_5 is vertex-transitive, every removal works
  CHECK(removable_vertex(rotative_tournament(2)) == 0);
}

TEST_CASE("hamiltonian cycles avoiding arcs") {
  Digraph r5 = rotative_tournament(2);
  HamCycle avoid01 = hamiltonian_cycle_avoiding(r5, {{0, 1}});
  std::vector<std::pair<int, int>> banned = {{0, 1}};
  CHECK(validate_ham_cycle(r5, avoid01, &banned));

  CHECK(validate_ham_cycle(testutil::directed_cycle(3),
                           hamiltonian_cycle_avoiding(testutil::directed_cycle(3), {})));

  Digraph r7 = rotative_tournament(3);
  HamCycle avoid = hamiltonian_cycle_avoiding(r7, {{0, 2}});
  banned = {{0, 2}};
  CHECK(validate_ham_cycle(r7, avoid, &banned));

  // a directed cycle is only 1-strong: avoiding one arc is refused up front
  CHECK_THROWS_AS(hamiltonian_cycle_avoiding(testutil::directed_cycle(5), {{0, 1}}), Error);
}

TEST_CASE("good bipartitions of strong tournaments") {
  CHECK_THROWS_AS(good_bipartition_tournament(exceptional("C3")), ExceptionalError);
  CHECK_THROWS_AS(good_bipartition_tournament(exceptional("T5")), ExceptionalError);

  Rng rng(89);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 4 + rng.below_int(8);
    Digraph t = random_tournament(rng, n);
    if (!is_strong(t)) continue;
    if (is_exceptional(t)) continue;
    Partition p = good_bipartition_tournament(t);
    CHECK(p.part_count == 2);
    CHECK(is_strong(partite_subgraph(t, p)));
  }
}

TEST_CASE("regular tournaments admit good bipartitions") {
  for (int k = 2; k <= 5; ++k) {
    Digraph r = rotative_tournament(k);
    Partition p = good_bipartition_tournament(r);
    CHECK(is_strong(partite_subgraph(r, p)));
  }
}

TEST_CASE("odd-order fuzz hits the removal recursion") {
  Rng rng(157);
  int checked = 0;
  while (checked < 400) {
    int n = 7 + 2 * rng.below_int(3);  // 7, 9, 11
    Digraph t = random_tournament(rng, n);
    if (!is_strong(t)) continue;
    ++checked;
    Partition p = good_bipartition_tournament(t);
    REQUIRE(is_strong(partite_subgraph(t, p)));
  }
}

TEST_CASE("every strong 6-vertex tournament admits a good bipartition") {
  // exhaustive over all 2^15 labelled tournaments on 6 vertices
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) pairs.push_back({u, v});
  int strong_count = 0;
  for (int mask = 0; mask < (1 << 15); ++mask) {
    Digraph t(6);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1)
        t.add_arc(pairs[b].first, pairs[b].second);
      else
        t.add_arc(pairs[b].second, pairs[b].first);
    }
    if (!is_strong(t)) continue;
    ++strong_count;
    Partition p = good_bipartition_tournament(t);
    REQUIRE(is_strong(partite_subgraph(t, p)));
  }
  CHECK(strong_count > 0);
}

TEST_CASE("strong bipartite subdigraphs of semicomplete digraphs") {
  for (const std::string& name : {"C3", "C_{3,1}", "T5", "S_{5,1}"})
    CHECK_THROWS_AS(strong_bipartite_semicomplete(exceptional(name)), ExceptionalError);

  // T5 plus the 2-cycle aba splits as {a,e} | {b,c,d}
  Digraph s = exceptional("T5");
  s.add_arc(1, 0);  // b -> a closes the 2-cycle aba
  Partition known_good(std::vector<int>{0, 1, 1, 1, 0}, 2);
  CHECK(is_strong(partite_subgraph(s, known_good)));
  Partition p = strong_bipartite_semicomplete(s);
  CHECK(is_strong(partite_subgraph(s, p)));

  // a single 2-cycle at e or d is not enough to block a partition
  for (const std::string& name : {"S_{5,2}", "S_{5,3}"}) {
    Digraph variant = exceptional(name);
    Partition q = strong_bipartite_semicomplete(variant);
    CHECK(is_strong(partite_subgraph(variant, q)));
  }

  Rng rng(97);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 5 + rng.below_int(5);
    Digraph sc = random_strong_semicomplete(rng, n, rng.below_int(n + 1));
    SearchReport oracle = exists_strong_bipartite(sc);
    try {
      Partition q = strong_bipartite_semicomplete(sc);
      CHECK(is_strong(partite_subgraph(sc, q)));
      CHECK(oracle.found);
    } catch (const ExceptionalError&) {
      CHECK_FALSE(oracle.found);
    }
  }
}

TEST_CASE("exceptional digraph recognition") {
  CHECK(is_exceptional(exceptional("T5")) == std::string("T5"));
  CHECK(is_exceptional(exceptional("C_{3,1}")) == std::string("C_{3,1}"));
  CHECK_FALSE(is_exceptional(rotative_tournament(2)).has_value());

  // a relabelled copy is still recognized
  Digraph t5 = exceptional("T5");
  std::vector<int> relabel = {3, 1, 4, 0, 2};
  Digraph shuffled(5);
  for (const Digraph::Arc& a : t5.arcs) shuffled.add_arc(relabel[a.tail], relabel[a.head]);
  CHECK(is_exceptional(shuffled) == std::string("T5"));

  for (const std::string& name : exceptional_names())
    CHECK(is_exceptional(exceptional(name)) == name);
  CHECK_THROWS_AS(exceptional("bogus"), Error);

  // label side tables line up with the dense ids
  CHECK(exceptional_labels("T5") == std::vector<std::string>{"a", "b", "c", "d", "e"});
  CHECK(exceptional_labels("C_{3,1}")[1] == "y");
}
