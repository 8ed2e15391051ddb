#include <doctest.h>

#include "spansub/connectivity.hpp"
#include "spansub/gallery.hpp"
#include "spansub/randgen.hpp"
#include "testutil.hpp"

using namespace spansub;

TEST_CASE("local lambda small cases") {
  auto [v1, w1] = local_lambda(testutil::directed_cycle(3), 0, 1);
  CHECK(v1 == 1);
  CHECK(w1.value == 1);

  auto [v2, w2] = local_lambda(testutil::complete_graph(4), 1, 3);
  CHECK(v2 == 3);

  // paper guarantees lambda(D_{2,5}) = 2 globally; v_{1,1} has out-degree 2
  Digraph d25 = dkr(2, 5);
  auto [v3, w3] = local_lambda(d25, 1, 2 * 5 + 1);  // v_{1,1} -> v_{3,1}
  CHECK(v3 == 2);
  CHECK(v3 == testutil::naive_lambda_pair(d25, 1, 11));
}

TEST_CASE("menger duality, both directions") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + rng.below_int(8);
    Graph g = random_graph(rng, n, rng.below_int(2 * n + 1));
    int u = rng.below_int(n), v = rng.below_int(n);
    if (u == v) continue;
    auto [value, witness] = local_lambda(g, u, v);
    CHECK(value == witness.value);
    CHECK(value == testutil::naive_lambda_pair(g, u, v));
    CHECK(testutil::cut_separates(g, witness.crossing, u, v));
  }
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + rng.below_int(8);
    Digraph d = random_digraph(rng, n, rng.below_int(3 * n + 1));
    int u = rng.below_int(n), v = rng.below_int(n);
    if (u == v) continue;
    auto [value, witness] = local_lambda(d, u, v);
    CHECK(value == witness.value);
    CHECK(value == testutil::naive_lambda_pair(d, u, v));
    CHECK(testutil::cut_separates(d, witness.crossing, u, v));
  }
}

TEST_CASE("global lambda values") {
  CHECK(global_lambda(testutil::cycle_graph(6)).first == 2);
  CHECK(global_lambda(rotative_tournament(2)).first == 2);
  CHECK(global_lambda(testutil::complete_graph(4)).first == 3);
  CHECK_THROWS_AS(global_lambda(Graph(1)), Error);

  // vertex-transitive rotative tournaments meet the min out-degree
  for (int k = 1; k <= 3; ++k) {
    Digraph r = rotative_tournament(k);
    CHECK(global_lambda(r).first == k);
  }
}

TEST_CASE("global lambda matches the naive oracle on random inputs") {
  Rng rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + rng.below_int(7);
    Graph g = random_graph(rng, n, rng.below_int(2 * n + 1));
    auto [value, witness] = global_lambda(g);
    CHECK(value == testutil::naive_global_lambda(g));
    CHECK(value == witness.value);
  }
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + rng.below_int(7);
    Digraph d = random_digraph(rng, n, rng.below_int(3 * n + 1));
    CHECK(global_lambda(d).first == testutil::naive_global_lambda(d));
  }
}

TEST_CASE("lambda is at most the minimum degree") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + rng.below_int(8);
    Graph g = random_connected_graph(rng, n, n + rng.below_int(n + 1));
    long long min_deg = 1 << 20;
    for (int d : g.degrees()) min_deg = std::min<long long>(min_deg, d);
    CHECK(global_lambda(g).first <= min_deg);
  }
}

TEST_CASE("essential lambda") {
  CHECK(essential_lambda(testutil::cycle_graph(6)).first == 2);
  // every 2-2 split of K4 crosses 4 edges
  CHECK(essential_lambda(testutil::complete_graph(4)).first == 4);

  // strictly above global lambda on stars
  Graph star(5);
  for (int v = 1; v < 5; ++v) star.add_edge(0, v);
  CHECK(global_lambda(star).first == 1);
  CHECK(essential_lambda(star).first == 2);

  CHECK_THROWS_AS(essential_lambda(testutil::path_graph(3)), Error);
  Graph disconnected(4);
  disconnected.add_edge(0, 1);
  CHECK_THROWS_AS(essential_lambda(disconnected), Error);
}

TEST_CASE("essential lambda always dominates global lambda") {
  Rng rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 4 + rng.below_int(6);
    Graph g = random_connected_graph(rng, n, n + rng.below_int(2 * n));
    auto [ess, witness] = essential_lambda(g);
    CHECK(ess >= global_lambda(g).first);
    if (witness) {
      CHECK(witness->side_x.size() >= 2);
      CHECK(witness->side_x.size() + 2 <= static_cast<std::size_t>(g.n));
      CHECK(witness->value == ess);
    }
  }
}

TEST_CASE("strong components in topological order") {
  Digraph path = testutil::directed_path(4);
  auto comps = strong_components(path);
  CHECK(comps.size() == 4);
  CHECK(comps.front() == std::vector<int>{0});
  CHECK(comps.back() == std::vector<int>{3});
  auto terminal = terminal_components(path);
  CHECK(terminal.size() == 1);
  CHECK(terminal[0] == std::vector<int>{3});

  CHECK(strong_components(testutil::directed_cycle(3)).size() == 1);
  CHECK(terminal_components(testutil::directed_cycle(3)).size() == 1);

  // R_3 with a feeder vertex: the tournament is the unique terminal component
  Digraph d(4);
  Digraph r3 = rotative_tournament(1);
  for (const Digraph::Arc& a : r3.arcs) d.add_arc(a.tail, a.head);
  d.add_arc(3, 0);
  auto t = terminal_components(d);
  CHECK(t.size() == 1);
  CHECK(t[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("strongness agrees with lambda >= 1 on random digraphs") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + rng.below_int(8);
    Digraph d = random_digraph(rng, n, rng.below_int(3 * n + 1));
    CHECK(is_strong(d) == (global_lambda(d).first >= 1));
  }
}

TEST_CASE("k-strongness") {
  CHECK(is_k_strong(rotative_tournament(2), 2));
  CHECK_FALSE(is_k_strong(rotative_tournament(2), 3));
  CHECK_FALSE(is_k_strong(testutil::directed_cycle(6), 2));
  // regular tournaments are ceil(n/3)-strong
  for (int k = 1; k <= 4; ++k) {
    int n = 2 * k + 1;
    CHECK(is_k_strong(rotative_tournament(k), (n + 2) / 3));
  }
}
