#include <random>

#include "doctest.h"
#include "elliptope/error.hpp"
#include "elliptope/graph_ops.hpp"
#include "elliptope/linalg.hpp"
#include "elliptope/oracle.hpp"

using namespace ell;

TEST_CASE("brute force maxcut on named graphs") {
  auto k33 = brute_force_maxcut(complete_kpartite({3, 3}));
  CHECK(k33.value == Rational(9));
  CHECK(k33.count == 1);
  CHECK(k33.optimal_cuts[0].side == std::vector<unsigned char>{0, 0, 0, 1, 1, 1});

  auto c1 = brute_force_maxcut(complete_weighted({5, 3, 4, 4}));
  CHECK(c1.value == Rational(64));
  CHECK(c1.count == 1);
  CHECK(c1.optimal_cuts[0].side == std::vector<unsigned char>{0, 0, 1, 1});

  auto c2 = brute_force_maxcut(complete_weighted({2, 2, 4, 4}));
  CHECK(c2.value == Rational(36));
  CHECK(c2.count == 2);
  CHECK(c2.optimal_cuts[0].side == std::vector<unsigned char>{0, 1, 0, 1});
  CHECK(c2.optimal_cuts[1].side == std::vector<unsigned char>{0, 1, 1, 0});

  CHECK_THROWS_AS((void)brute_force_maxcut(edgeless(29)), Error);
}

TEST_CASE("every reported optimal cut attains the value") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 6;
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v, Rational(1 + static_cast<long>(rng() % 6), 1 + rng() % 2));
    auto mc = brute_force_maxcut(g);
    for (const auto& p : mc.optimal_cuts) {
      CHECK(cut_value(g, p) == mc.value);
      CHECK(p.side[0] == 0);
    }
  }
}

TEST_CASE("cut_value equals the quadratic form") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 7;
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2)
          g.add_edge(u, v, Rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3));
    VertexPartition p;
    p.side.resize(n);
    for (auto& s : p.side) s = rng() % 2;
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = Rational(p.side[i] == 0 ? 1 : -1);
    CHECK(cut_value(g, p) == laplacian(g).quad_form(x) * Rational(1, 4));
  }
  CHECK(cut_value(complete(2), VertexPartition{{0, 1}}) == Rational(1));
  CHECK(cut_value(complete(3), VertexPartition{{0, 0, 0}}) == Rational(0));
  CHECK_THROWS_AS((void)cut_value(complete(3), VertexPartition{{0, 1}}), Error);
}

TEST_CASE("example graph cut value agrees across both routes") {
  Graph g = read_graph_file(std::string(ELL_DATA_DIR) + "/example11.g");
  REQUIRE(g.n() == 13);
  // ({D,E,F,M}, rest) = vertices {3,4,5,12}
  VertexPartition p;
  p.side.assign(13, 0);
  for (int v : {3, 4, 5, 12}) p.side[v] = 1;
  std::vector<Rational> x(13);
  for (int i = 0; i < 13; ++i) x[i] = Rational(p.side[i] == 0 ? 1 : -1);
  Rational combinatorial = cut_value(g, p);
  CHECK(combinatorial == laplacian(g).quad_form(x) * Rational(1, 4));
  CHECK(combinatorial <= brute_force_maxcut(g).value);
}

TEST_CASE("maxcut scaling and relabeling invariance") {
  std::mt19937 rng(43);
  Graph g(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (rng() % 2) g.add_edge(u, v, Rational(1 + static_cast<long>(rng() % 5)));
  Rational base = brute_force_maxcut(g).value;
  CHECK(brute_force_maxcut(scale_weights(g, Rational(7, 3))).value ==
        base * Rational(7, 3));
  Graph relabeled = induced_subgraph(g, {5, 3, 0, 1, 4, 2});
  CHECK(brute_force_maxcut(relabeled).value == base);
}

TEST_CASE("exact_sum_decision") {
  auto s1 = exact_sum_decision(std::vector<long long>{5, 3, 4, 4});
  REQUIRE(s1.has_value());
  long long sum = 0;
  for (int i : *s1) sum += std::vector<long long>{5, 3, 4, 4}[i];
  CHECK(sum == 8);

  CHECK(!exact_sum_decision(std::vector<long long>{1, 1, 3}).has_value());

  auto s2 = exact_sum_decision(std::vector<long long>{2, 2, 4, 4});
  REQUIRE(s2.has_value());
  sum = 0;
  for (int i : *s2) sum += std::vector<long long>{2, 2, 4, 4}[i];
  CHECK(sum == 6);

  // rational inputs go through the lcm scaling
  auto s3 = exact_sum_decision(std::vector<Rational>{{1, 2}, {1, 3}, {1, 6}});
  REQUIRE(s3.has_value());  // 1/2 = 1/3 + 1/6
}

TEST_CASE("count_balanced_partitions") {
  CHECK(count_balanced_partitions({5, 3, 4, 4}, 100) == 1);
  CHECK(count_balanced_partitions({2, 2, 4, 4}, 100) == 2);
  CHECK(count_balanced_partitions({1, 2, 4}, 100) == 0);
  CHECK(count_balanced_partitions({1, 1, 1, 1}, 2) == 2);  // saturates at the cap
}

TEST_CASE("weighted complete maxcut matches the balanced-subset criterion") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + trial % 4;
    std::vector<Rational> m;
    std::vector<long long> ints;
    for (int i = 0; i < n; ++i) {
      long v = 1 + static_cast<long>(rng() % 6);
      m.push_back(Rational(v));
      ints.push_back(v);
    }
    Rational total;
    for (const auto& x : m) total += x;
    Rational bound = total * total * Rational(1, 4);
    Rational mc = brute_force_maxcut(complete_weighted(m)).value;
    CHECK(mc <= bound);
    CHECK((mc == bound) == exact_sum_decision(ints).has_value());
  }
}
