#include <random>

#include "doctest.h"
#include "elliptope/error.hpp"
#include "elliptope/graph_ops.hpp"
#include "elliptope/oracle.hpp"

using namespace ell;

TEST_CASE("join") {
  Graph c4 = join(edgeless(2), edgeless(2));
  CHECK(c4.edge_count() == 4);  // K(2,2)

  Graph cone = join(edgeless(1), cycle(4));
  CHECK(cone.edge_count() == 8);

  Graph gg = join(path(3), path(3));
  CHECK(gg.edge_count() == 13);  // 2 + 2 + 9

  // |E(join)| = |E1| + |E2| + n1 n2 on a few shapes
  for (auto& [a, b] : std::vector<std::pair<Graph, Graph>>{
           {cycle(3), path(4)}, {complete(4), edgeless(2)}}) {
    CHECK(join(a, b).edge_count() == a.edge_count() + b.edge_count() + a.n() * b.n());
  }
}

TEST_CASE("split") {
  auto res = split(from_edge_list(2, {{0, 1, Rational(1)}}), SplitSpec{{2, 2}});
  CHECK(res.graph.n() == 4);
  CHECK(res.graph.edge_count() == 4);
  for (const auto& [e, w] : res.graph.edges()) CHECK(w == Rational(1, 4));
  CHECK(res.clone_map == std::vector<int>{0, 0, 1, 1});

  // split of the weighted complete graph is the unweighted multipartite graph
  Graph w = complete_weighted({2, 3, 5});
  auto sp = split(w, SplitSpec{{2, 3, 5}});
  Graph kp = complete_kpartite({2, 3, 5});
  CHECK(sp.graph.n() == kp.n());
  CHECK(sp.graph.edges() == kp.edges());

  // identity multiplicities leave the graph alone
  auto same = split(cycle(5), SplitSpec{{1, 1, 1, 1, 1}});
  CHECK(same.graph.edges() == cycle(5).edges());

  CHECK_THROWS_AS((void)split(cycle(3), SplitSpec{{1, 0, 1}}), Error);
  CHECK_THROWS_AS((void)split(cycle(3), SplitSpec{{1, 1}}), Error);
}

TEST_CASE("split conserves total weight") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 5;
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v, Rational(1 + static_cast<long>(rng() % 5), 1 + rng() % 3));
    SplitSpec spec{std::vector<int>(n, 1)};
    for (auto& p : spec.multiplicities) p = 1 + rng() % 3;
    CHECK(split(g, spec).graph.total_weight() == g.total_weight());
  }
}

TEST_CASE("lex product") {
  Graph k4 = lex_product(path(2), path(2));
  CHECK(k4.n() == 4);
  CHECK(k4.edge_count() == 6);  // P2 * P2 is K4

  Graph same = lex_product(edgeless(1), cycle(5));
  CHECK(same.edges() == cycle(5).edges());

  Graph big = lex_product(complete(3), path(3));
  CHECK(big.n() == 9);
  CHECK(big.edge_count() == 33);  // 9*3 + 3*2
}

TEST_CASE("lex laplacian identity") {
  std::vector<Graph> factors{path(2), path(3), complete(3), cycle(4), edgeless(2)};
  for (const auto& a : factors)
    for (const auto& b : factors) CHECK(lex_laplacian_identity(a, b));
}

TEST_CASE("complete multipartite and weighted complete") {
  CHECK(complete_kpartite({2, 3}).edge_count() == 6);
  CHECK(complete_kpartite({1, 1, 3}).edge_count() == 7);
  CHECK(complete_kpartite({1, 1, 1, 1}).edges() == complete(4).edges());
  CHECK_THROWS_AS((void)complete_kpartite({}), Error);

  Graph c1 = complete_weighted({5, 3, 4, 4});
  CHECK(c1.weight(0, 1) == Rational(15));
  CHECK(c1.weight(2, 3) == Rational(16));
  CHECK(complete_weighted({1, 1}).edges() == complete(2).edges());
  CHECK_THROWS_AS((void)complete_weighted({Rational(1), Rational(-2)}), Error);
}

TEST_CASE("family constructors") {
  CHECK(cycle(3).edges() == complete(3).edges());
  CHECK(path(2).edges() == complete(2).edges());
  CHECK_THROWS_AS((void)cycle(2), Error);
  CHECK_THROWS_AS((void)path(0), Error);

  // C4 equals K(2,2) after interleaving {0,2} | {1,3}
  Graph c4 = cycle(4);
  Graph k22 = complete_kpartite({2, 2});
  Graph relabeled = induced_subgraph(c4, {0, 2, 1, 3});
  CHECK(relabeled.edges() == k22.edges());
}

TEST_CASE("oracle maxcut is split invariant") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + trial % 4;
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3) g.add_edge(u, v, Rational(1 + static_cast<long>(rng() % 4)));
    SplitSpec spec{std::vector<int>(n, 1)};
    int budget = 12 - n;
    for (auto& p : spec.multiplicities) {
      int extra = static_cast<int>(rng() % 3);
      extra = std::min(extra, budget);
      p += extra;
      budget -= extra;
    }
    CHECK(brute_force_maxcut(split(g, spec).graph).value == brute_force_maxcut(g).value);
  }
}
