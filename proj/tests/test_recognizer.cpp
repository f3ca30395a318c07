#include <fstream>
#include <sstream>

#include "doctest.h"
#include "elliptope/error.hpp"
#include "elliptope/oracle.hpp"
#include "elliptope/recognizer.hpp"
#include "elliptope/sdp.hpp"

using namespace ell;

namespace {

std::string data_path(const std::string& name) { return std::string(ELL_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("recognizer matches cones and fans") {
  RecognitionReport cone = recognize_complement_core(join(cycle(4), edgeless(5)));
  CHECK(cone.matched);
  CHECK(cone.reason == RecognitionReason::matched);
  CHECK(*cone.value == Rational(20));
  CHECK(*cone.unique_cut);

  RecognitionReport fan = recognize_complement_core(join(path(4), edgeless(6)));
  CHECK(fan.matched);
  CHECK(*fan.value == Rational(24));
  CHECK(*fan.unique_cut);
}

TEST_CASE("recognizer declines out-of-class graphs") {
  RecognitionReport k3 = recognize_complement_core(complete(3));
  CHECK(!k3.matched);
  CHECK(k3.reason == RecognitionReason::adjacency_failed);

  // C5 has a connected self-complement spanning all vertices; its low
  // complement degrees miss the bound
  RecognitionReport c5 = recognize_complement_core(cycle(5));
  CHECK(!c5.matched);
  CHECK(c5.reason == RecognitionReason::degree_bound_failed);

  CHECK_THROWS_AS((void)recognize_complement_core(complete_weighted({1, 2, 3})), Error);
}

TEST_CASE("recognizer balanced case") {
  RecognitionReport r = recognize_complement_core(join(cycle(4), edgeless(4)));
  CHECK(r.matched);
  CHECK(r.reason == RecognitionReason::matched_balanced);
  CHECK(*r.value == Rational(16));
  CHECK(!r.unique_cut.has_value());
}

TEST_CASE("matched values agree with the oracle and strict matches are unique") {
  for (int m = 4; m <= 6; ++m)
    for (int n = std::max(4, m); n <= 7; ++n)
      for (bool use_cycle : {true, false}) {
        Graph g = join(use_cycle ? cycle(m) : path(m), edgeless(n));
        RecognitionReport r = recognize_complement_core(g);
        REQUIRE(r.matched);
        MaxCutResult mc = brute_force_maxcut(g);
        CHECK(*r.value == mc.value);
        CHECK(*r.value == Rational(static_cast<long>(m) * n));
        if (m != n) {
          CHECK(mc.count == 1);
          CHECK(mc.optimal_cuts[0].side == r.cut->side);
        }
      }
}

TEST_CASE("degree bound uses the floor form") {
  // single edge on {a,c} joined with one vertex: three maximum cuts, must decline
  Graph g = from_edge_list(
      4, {{0, 2, Rational(1)}, {3, 0, Rational(1)}, {3, 1, Rational(1)}, {3, 2, Rational(1)}});
  RecognitionReport r = recognize_complement_core(g);
  CHECK(!r.matched);
  CHECK(brute_force_maxcut(g).count == 3);
}

TEST_CASE("edgeless graphs are declined") {
  RecognitionReport r = recognize_complement_core(edgeless(3));
  CHECK(!r.matched);
  CHECK(r.reason == RecognitionReason::adjacency_failed);
}

TEST_CASE("kpartite exactness verdicts") {
  auto non_unique = kpartite_exactness({1, 2, 3, 4});
  CHECK(non_unique.verdict == KpartiteVerdict::exact_non_unique);
  long long total = 0;
  for (int i : non_unique.witness) total += std::vector<long long>{1, 2, 3, 4}[i];
  CHECK(total == 5);

  CHECK(kpartite_exactness({1, 1, 3}).verdict == KpartiteVerdict::exact_unique);
  CHECK(kpartite_exactness({1, 2, 4}).verdict == KpartiteVerdict::exact_unique);
  CHECK(kpartite_exactness({2, 3, 4}).verdict == KpartiteVerdict::not_exact);
  CHECK(kpartite_exactness({2, 3, 5}).verdict == KpartiteVerdict::exact_non_unique);

  CHECK_THROWS_AS((void)kpartite_exactness({3, 1}), Error);
  CHECK_THROWS_AS((void)kpartite_exactness({}), Error);
}

TEST_CASE("kpartite verdict tracks the numeric gap at small sizes") {
  std::vector<std::vector<long long>> cases{{1, 1},    {1, 2},    {2, 2},    {1, 1, 2},
                                            {1, 2, 3}, {2, 2, 2}, {1, 1, 3}, {2, 3, 4},
                                            {1, 2, 4}, {2, 2, 3}, {1, 1, 1, 2}};
  for (const auto& a : cases) {
    KpartiteResult v = kpartite_exactness(a);
    Graph g = complete_kpartite(std::vector<int>(a.begin(), a.end()));
    double phi = solve_phi(g, 1e-8).phi;
    double mc = brute_force_maxcut(g).value.to_double();
    bool exact_numeric = phi - mc < 1e-5;
    CHECK(exact_numeric == (v.verdict != KpartiteVerdict::not_exact));
  }
}

TEST_CASE("hardness instances") {
  Graph yes = build_hardness_instance({2, 3, 5});
  CHECK(yes.n() == 10);
  CHECK(graphs_equal(yes, complete_kpartite({2, 3, 5})));

  Graph no = build_hardness_instance({2, 3, 4});
  CHECK(brute_force_maxcut(no).value == Rational(20));

  CHECK_THROWS_AS((void)build_hardness_instance({1, 2, 5}), Error);
}

TEST_CASE("split decomposition accepts the shipped example graph") {
  Graph g = read_graph_file(data_path("example11.g"));
  REQUIRE(g.n() == 13);
  SplitDecompWitness w = parse_decomp_witness(slurp(data_path("example11_witness.json")));
  DecompResult res = verify_split_decomposable(g, w);
  REQUIRE(res.accepted);
  CHECK(res.reason == DecompReason::accepted);
  CHECK(res.maxcut == Rational(108));
  CHECK(brute_force_maxcut(g).value == res.maxcut);
}

TEST_CASE("split decomposition rejections carry stable reasons") {
  Graph g = read_graph_file(data_path("example11.g"));
  SplitDecompWitness base = parse_decomp_witness(slurp(data_path("example11_witness.json")));

  // raise a residual edge's weight above w/p^2; rebuild the graph by hand
  Graph heavier(13);
  for (const auto& [e, wt] : g.edges())
    heavier.add_edge(e.first, e.second,
                     (e.first == 9 && e.second == 10) ? Rational(3) : wt);
  DecompResult too_heavy = verify_split_decomposable(heavier, base);
  CHECK(!too_heavy.accepted);
  CHECK(too_heavy.reason == DecompReason::residual_too_heavy);
  CHECK(verify_split_decomposable(heavier, base).reason == too_heavy.reason);

  // move a residual edge across clone classes: replace (9,10) by (8,9)
  Graph moved(13);
  for (const auto& [e, wt] : g.edges())
    if (e.first == 9 && e.second == 10)
      moved.add_edge(8, 9, wt);
    else
      moved.add_edge(e.first, e.second, wt);
  DecompResult placement = verify_split_decomposable(moved, base);
  CHECK(!placement.accepted);
  CHECK(placement.reason == DecompReason::residual_placement);

  // drop a skeleton clone edge
  Graph missing(13);
  for (const auto& [e, wt] : g.edges())
    if (!(e.first == 0 && e.second == 3)) missing.add_edge(e.first, e.second, wt);
  CHECK(verify_split_decomposable(missing, base).reason ==
        DecompReason::missing_skeleton_edge);

  // mangle the mapping
  SplitDecompWitness bad = base;
  bad.mapping[0] = bad.mapping[1];
  CHECK(verify_split_decomposable(g, bad).reason == DecompReason::mapping_not_bijection);

  SplitDecompWitness small_p = base;
  small_p.copies = 1;
  CHECK(verify_split_decomposable(g, small_p).reason == DecompReason::bad_parameters);
}

TEST_CASE("split decomposition accepts a caller-provided skeleton certificate") {
  Graph g = read_graph_file(data_path("example11.g"));
  SplitDecompWitness w = parse_decomp_witness(slurp(data_path("example11_witness.json")));
  // K(1,1,3) = K(1,1) joined with 3 isolated vertices; certify it directly
  w.skeleton_certificate = cert_join_unbalanced(complete(2), edgeless(3));
  REQUIRE(graphs_equal(w.skeleton_certificate->source_graph, w.skeleton));
  DecompResult res = verify_split_decomposable(g, w);
  CHECK(res.accepted);
  CHECK(res.maxcut == Rational(108));
}

TEST_CASE("witness json parsing") {
  CHECK_THROWS_AS((void)parse_decomp_witness("{"), Error);
  CHECK_THROWS_AS((void)parse_decomp_witness("{\"multiplicities\": [1]}"), Error);
}
