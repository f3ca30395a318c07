#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "elliptope.h"
#include "json.hpp"

using nlohmann::json;

namespace {

std::string data_path(const std::string& name) { return std::string(ELL_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Text {
  char* p = nullptr;
  ~Text() { ell_free_text(p); }
};

struct G {
  ell_graph* p = nullptr;
  ~G() { ell_graph_free(p); }
};

}  // namespace

TEST_CASE("graph construction, io, and error reporting") {
  G g;
  REQUIRE(ell_gen_cycle(5, &g.p) == 0);
  CHECK(ell_graph_order(g.p) == 5);
  CHECK(ell_graph_edge_count(g.p) == 5);

  Text t;
  REQUIRE(ell_graph_to_text(g.p, &t.p) == 0);
  G back;
  REQUIRE(ell_graph_from_text(t.p, &back.p) == 0);
  CHECK(ell_graph_edge_count(back.p) == 5);

  G bad;
  ell_status st = ell_gen_cycle(2, &bad.p);
  CHECK(st != 0);
  CHECK(std::strcmp(ell_status_name(st), "BadSize") == 0);
  CHECK(std::strlen(ell_last_error()) > 0);
}

TEST_CASE("maxcut json") {
  G g;
  const char* masses[] = {"5", "3", "4", "4"};
  REQUIRE(ell_gen_wcomplete(masses, 4, &g.p) == 0);
  Text t;
  REQUIRE(ell_maxcut_json(g.p, 1, &t.p) == 0);
  json r = json::parse(t.p);
  CHECK(r["value"] == "64");
  CHECK(r["count"] == 1);
  CHECK(r["cuts"].size() == 1);

  // emitted documents re-serialize byte-identically
  CHECK(json::parse(t.p).dump() == std::string(t.p));
}

TEST_CASE("phi and exactness json") {
  G g;
  REQUIRE(ell_graph_read_file(data_path("k3lexp3.g").c_str(), &g.p) == 0);
  Text t;
  REQUIRE(ell_phi_json(g.p, 1e-7, &t.p) == 0);
  json r = json::parse(t.p);
  CHECK(std::fabs(r["phi"].get<double>() - 20.25) < 1e-4);

  Text e;
  int negative = 0;
  REQUIRE(ell_exactness_json(g.p, 1e-5, &e.p, &negative) == 0);
  json er = json::parse(e.p);
  CHECK(er["verdict"] == "GapAtLeast");
  CHECK(negative == 1);
}

TEST_CASE("certify json across methods") {
  {
    G g;
    REQUIRE(ell_graph_read_file(data_path("counter1.g").c_str(), &g.p) == 0);
    Text t;
    REQUIRE(ell_certify_json(g.p, "nondominating", nullptr, 1, &t.p) == 0);
    json r = json::parse(t.p);
    CHECK(r["verified"] == true);
    CHECK(r["objective"] == "64");
    CHECK(r["report"]["rank_x"] == 3);
    CHECK(r["dump"]["y_diag"].size() == 4);
  }
  {
    G g;
    REQUIRE(ell_graph_read_file(data_path("cone45.g").c_str(), &g.p) == 0);
    Text t;
    REQUIRE(ell_certify_json(g.p, "join-unbalanced", nullptr, 0, &t.p) == 0);
    json r = json::parse(t.p);
    CHECK(r["verified"] == true);
    CHECK(r["objective"] == "20");
    CHECK(r["unique"] == "GuaranteedUnique");
  }
  {
    G g;
    REQUIRE(ell_graph_read_file(data_path("fig3a.g").c_str(), &g.p) == 0);
    Text t;
    REQUIRE(ell_certify_json(g.p, "join-balanced", nullptr, 0, &t.p) == 0);
    json r = json::parse(t.p);
    CHECK(r["verified"] == true);
    CHECK(r["objective"] == "9");
    CHECK(r["unique"] == "Inconclusive");
  }
  {
    G g;
    REQUIRE(ell_graph_read_file(data_path("k3lexp3.g").c_str(), &g.p) == 0);
    std::string k3_path = "/tmp/ell_capi_k3.g", p3_path = "/tmp/ell_capi_p3.g";
    std::string witness =
        "{\"g1\": \"" + k3_path + "\", \"g2\": \"" + p3_path + "\"}";
    G k3, p3;
    REQUIRE(ell_gen_complete(3, &k3.p) == 0);
    REQUIRE(ell_gen_path(3, &p3.p) == 0);
    REQUIRE(ell_graph_write_file(k3.p, k3_path.c_str()) == 0);
    REQUIRE(ell_graph_write_file(p3.p, p3_path.c_str()) == 0);
    Text t;
    // K3 is not exact, so the lex lift must refuse
    ell_status st = ell_certify_json(g.p, "lex", witness.c_str(), 0, &t.p);
    CHECK(st != 0);
    CHECK(std::strcmp(ell_status_name(st), "PairNotOptimal") == 0);
    std::remove(k3_path.c_str());
    std::remove(p3_path.c_str());
  }
}

TEST_CASE("recognize, kpartite, hardness") {
  G g;
  REQUIRE(ell_graph_read_file(data_path("cone45.g").c_str(), &g.p) == 0);
  Text t;
  int negative = 1;
  REQUIRE(ell_recognize_json(g.p, &t.p, &negative) == 0);
  json r = json::parse(t.p);
  CHECK(r["matched"] == true);
  CHECK(r["value"] == "20");
  CHECK(negative == 0);

  long long parts[] = {1, 2, 3, 4};
  Text kp;
  REQUIRE(ell_kpartite_json(parts, 4, &kp.p, &negative) == 0);
  CHECK(json::parse(kp.p)["verdict"] == "ExactNonUnique");
  CHECK(negative == 0);

  long long bad[] = {1, 2, 5};
  G h;
  ell_status st = ell_hardness(bad, 3, &h.p);
  CHECK(std::strcmp(ell_status_name(st), "DegenerateInstance") == 0);

  long long good[] = {2, 3, 5};
  REQUIRE(ell_hardness(good, 3, &h.p) == 0);
  CHECK(ell_graph_order(h.p) == 10);
}

TEST_CASE("verify-decomp and counterexample json") {
  G g;
  REQUIRE(ell_graph_read_file(data_path("example11.g").c_str(), &g.p) == 0);
  std::string witness = slurp(data_path("example11_witness.json"));
  Text t;
  int negative = 1;
  REQUIRE(ell_verify_decomp_json(g.p, witness.c_str(), &t.p, &negative) == 0);
  json r = json::parse(t.p);
  CHECK(r["accepted"] == true);
  CHECK(r["maxcut"] == "108");
  CHECK(negative == 0);

  Text c1;
  REQUIRE(ell_counterexample_json(1, &c1.p) == 0);
  json cr = json::parse(c1.p);
  CHECK(cr["objective"] == "64");
  CHECK(cr["decomposition"][0] == "1/48");
  CHECK(cr["decomposition"][1] == "47/48");
  CHECK(cr["all_ok"] == true);

  Text c2;
  REQUIRE(ell_counterexample_json(2, &c2.p) == 0);
  json cr2 = json::parse(c2.p);
  CHECK(cr2["objective"] == "36");
  CHECK(cr2["outside_rank1_hull"] == true);
}

TEST_CASE("suite json") {
  Text t;
  int negative = 1;
  REQUIRE(ell_suite_json("counterexamples", ELL_DATA_DIR, &t.p, &negative) == 0);
  json r = json::parse(t.p);
  CHECK(r["all_pass"] == true);
  CHECK(r["total"] == 2);
  CHECK(negative == 0);

  Text bad;
  ell_status st = ell_suite_json("nope", ELL_DATA_DIR, &bad.p, &negative);
  CHECK(std::strcmp(ell_status_name(st), "UsageError") == 0);
}
