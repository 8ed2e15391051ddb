#include <doctest.h>

#include "spansub/ear_decomposition.hpp"
#include "spansub/oracle.hpp"
#include "spansub/randgen.hpp"
#include "spansub/tournament.hpp"
#include "testutil.hpp"

using namespace spansub;

TEST_CASE("a directed triangle is a single ear") {
  EarDecomposition ed = ear_decomposition(testutil::directed_cycle(3));
  CHECK(ed.ears.size() == 1);
  CHECK(ed.ears[0].arcs.size() == 3);
  CHECK(validate_ear_decomposition(testutil::directed_cycle(3), ed));
}

TEST_CASE("two triangles sharing a vertex") {
  Digraph d(5);
  d.add_arc(0, 1);
  d.add_arc(1, 2);
  d.add_arc(2, 0);
  d.add_arc(0, 3);
  d.add_arc(3, 4);
  d.add_arc(4, 0);
  EarDecomposition ed = ear_decomposition(d);
  CHECK(ed.ears.size() == 2);
  CHECK(ed.ears[0].arcs.size() == 3);
  CHECK(ed.ears[1].arcs.size() == 3);
  CHECK_FALSE(ed.ears[1].trivial());
}

TEST_CASE("biorientation of K3 from an explicit start cycle") {
  Digraph d = testutil::biorientation(testutil::complete_graph(3));
  EarDecomposition ed = ear_decomposition(d, std::vector<int>{0, 1, 2});
  CHECK(ed.ears.size() == 4);  // the 3-cycle plus 3 trivial ears
  int trivial = 0;
  for (const Ear& e : ed.ears) trivial += e.trivial() ? 1 : 0;
  CHECK(trivial == 3);
  CHECK(validate_ear_decomposition(d, ed));

  CHECK_THROWS_AS(ear_decomposition(d, std::vector<int>{0, 0, 1}), Error);
  CHECK_THROWS_AS(ear_decomposition(testutil::directed_path(3)), Error);
}

TEST_CASE("replay reconstructs every arc once on random strong digraphs") {
  Rng rng(73);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + rng.below_int(15);
    Digraph d = random_strong_digraph(rng, n, n + rng.below_int(3 * n));
    EarDecomposition ed = ear_decomposition(d);
    CHECK(validate_ear_decomposition(d, ed));
    // prefix unions stay strong
    Digraph prefix(d.n);
    std::vector<char> covered(d.n, 0);
    for (const Ear& ear : ed.ears) {
      for (int a : ear.arcs) prefix.add_arc(d.arcs[a].tail, d.arcs[a].head);
      for (int v : ear.vertices) covered[v] = 1;
      std::vector<int> present;
      for (int v = 0; v < d.n; ++v)
        if (covered[v]) present.push_back(v);
      CHECK(is_strong(induced_subdigraph(prefix, present)));
    }
  }
}

TEST_CASE("strong 3-partite on small cycles") {
  Strong3PartiteResult c5 = strong_3partite(testutil::directed_cycle(5));
  CHECK(c5.partition.part_count == 3);
  CHECK(is_strong(c5.subdigraph));

  Strong3PartiteResult c4 = strong_3partite(testutil::directed_cycle(4));
  CHECK(c4.partition.part_count == 2);
  CHECK(is_strong(c4.subdigraph));
}

TEST_CASE("strong 3-partite on strong tournaments") {
  Rng rng(79);
  int found = 0;
  while (found < 15) {
    Digraph t = random_tournament(rng, 6);
    if (!is_strong(t)) continue;
    ++found;
    Strong3PartiteResult res = strong_3partite(t);
    CHECK(res.partition.part_count <= 3);
    CHECK(is_strong(res.subdigraph));
    for (const Digraph::Arc& a : res.subdigraph.arcs)
      CHECK(res.partition.part_of[a.tail] != res.partition.part_of[a.head]);
  }
}

TEST_CASE("degenerate inputs") {
  CHECK(strong_3partite(Digraph(1)).partition.part_count == 1);
  CHECK_THROWS_AS(strong_3partite(testutil::directed_path(4)), Error);
}
