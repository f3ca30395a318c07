#include "elliptope.h"

#include <cstring>
#include <sstream>

#include "elliptope/certificates.hpp"
#include "elliptope/error.hpp"
#include "elliptope/graph.hpp"
#include "elliptope/graph_ops.hpp"
#include "elliptope/oracle.hpp"
#include "elliptope/recognizer.hpp"
#include "elliptope/sdp.hpp"
#include "elliptope/suite.hpp"
#include "json.hpp"

using nlohmann::json;

struct ell_graph {
  ell::Graph g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
ell_status guarded(Fn&& fn) {
  try {
    fn();
    return 0;
  } catch (const ell::Error& e) {
    g_last_error = e.what();
    return static_cast<ell_status>(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return static_cast<ell_status>(ell::ErrorCode::internal_error);
  }
}

json partition_json(const ell::VertexPartition& p) {
  json arr = json::array();
  for (auto s : p.side) arr.push_back(static_cast<int>(s));
  return arr;
}

json rational_list_json(const std::vector<ell::Rational>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

json report_json(const ell::VerificationReport& r) {
  return json{{"feasible_primal", r.feasible_primal},
              {"feasible_dual", r.feasible_dual},
              {"objective", r.objective.str()},
              {"duality_gap", r.duality_gap.str()},
              {"complementary_slackness", r.complementary_slackness},
              {"rank_x", r.rank_x},
              {"rank_s", r.rank_s},
              {"shared_nullity", r.shared_nullity},
              {"optimal", r.optimal()}};
}

json dump_json(const ell::Certificate& c) {
  json ydiag = json::array();
  for (int i = 0; i < c.y.n(); ++i) ydiag.push_back(c.y.q(i, i).str());
  json xlower = json::array();
  for (int i = 0; i < c.x.n(); ++i) {
    json row = json::array();
    for (int j = 0; j <= i; ++j) row.push_back(c.x.q(i, j).str());
    xlower.push_back(row);
  }
  json slower = json::array();
  for (int i = 0; i < c.s.n(); ++i) {
    json row = json::array();
    for (int j = 0; j <= i; ++j) row.push_back(c.s.q(i, j).str());
    slower.push_back(row);
  }
  return json{{"y_diag", ydiag}, {"x_lower", xlower}, {"s_lower", slower}};
}

// Candidate split points k where g == join(g[0..k), g[k..n)).
std::vector<int> join_split_points(const ell::Graph& g) {
  std::vector<int> out;
  for (int k = 1; k < g.n(); ++k) {
    bool ok = true;
    for (int u = 0; u < k && ok; ++u)
      for (int v = k; v < g.n() && ok; ++v)
        if (g.weight(u, v) != ell::Rational(1)) ok = false;
    if (ok) out.push_back(k);
  }
  return out;
}

std::pair<ell::Graph, ell::Graph> split_sides(const ell::Graph& g, int k) {
  std::vector<int> a(k), b(g.n() - k);
  for (int i = 0; i < k; ++i) a[i] = i;
  for (int i = k; i < g.n(); ++i) b[i - k] = i;
  return {ell::induced_subgraph(g, a), ell::induced_subgraph(g, b)};
}

std::vector<ell::Rational> recover_masses(const ell::Graph& g) {
  int n = g.n();
  if (n < 3)
    ell::fail(ell::ErrorCode::usage_error,
              "mass recovery needs n >= 3; provide masses in the witness");
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v))
        ell::fail(ell::ErrorCode::usage_error,
                  "nondominating certification needs a complete weighted graph");
  ell::Rational m0sq = g.weight(0, 1) * g.weight(0, 2) / g.weight(1, 2);
  auto m0 = m0sq.sqrt_exact();
  if (!m0 || m0->sign() <= 0)
    ell::fail(ell::ErrorCode::usage_error,
              "masses are not recoverable exactly; provide them in the witness");
  std::vector<ell::Rational> m(n);
  m[0] = *m0;
  for (int i = 1; i < n; ++i) m[i] = g.weight(0, i) / m[0];
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.weight(u, v) != m[u] * m[v])
        ell::fail(ell::ErrorCode::usage_error,
                  "weights are not of the form m_i * m_j");
  return m;
}

json certify_impl(const ell::Graph& g, const std::string& method,
                  const char* witness_json, bool dump) {
  json witness;
  if (witness_json && *witness_json) {
    try {
      witness = json::parse(witness_json);
    } catch (const std::exception& e) {
      ell::fail(ell::ErrorCode::parse_error, std::string("witness json: ") + e.what());
    }
  }

  ell::Certificate cert;
  json extra;

  if (method == "join-balanced" || method == "join-unbalanced") {
    std::vector<int> candidates;
    if (witness.contains("split_at"))
      candidates.push_back(witness["split_at"].get<int>());
    else
      candidates = join_split_points(g);
    if (candidates.empty())
      ell::fail(ell::ErrorCode::usage_error, "graph has no join split point");
    std::string last_reason = "no candidate split point applied";
    bool built = false;
    for (int k : candidates) {
      if (k < 1 || k >= g.n()) continue;
      auto [ga, gb] = split_sides(g, k);
      if (!ell::graphs_equal(ell::join(ga, gb), g)) {
        last_reason = "vertices [0," + std::to_string(k) + ") do not induce a join";
        continue;
      }
      try {
        if (method == "join-balanced") {
          cert = ell::cert_join_balanced(ga, gb);
          extra["unique"] = ell::uniqueness_join_balanced(ga, gb) ==
                                    ell::Uniqueness::guaranteed_unique
                                ? "GuaranteedUnique"
                                : "Inconclusive";
        } else {
          cert = ell::cert_join_unbalanced(ga, gb);
          extra["unique"] = "GuaranteedUnique";
        }
        extra["split_at"] = k;
        built = true;
        break;
      } catch (const ell::Error& e) {
        last_reason = e.what();
      }
    }
    if (!built) ell::fail(ell::ErrorCode::witness_invalid, last_reason);
  } else if (method == "nondominating") {
    std::vector<ell::Rational> m;
    if (witness.contains("m"))
      for (const auto& s : witness["m"]) m.push_back(ell::Rational::parse(s.get<std::string>()));
    else
      m = recover_masses(g);
    if (!ell::graphs_equal(ell::complete_weighted(m), g))
      ell::fail(ell::ErrorCode::witness_invalid, "graph is not the complete graph weighted by m");
    ell::NonDominatingData nd;
    cert = ell::cert_nondominating(m, &nd);
    extra["m"] = rational_list_json(m);
    extra["dprime"] = rational_list_json(nd.dprime);
  } else if (method == "lex") {
    if (!witness.contains("g1") || !witness.contains("g2"))
      ell::fail(ell::ErrorCode::usage_error,
                "lex certification needs witness {\"g1\": path, \"g2\": path}");
    ell::Graph g1 = ell::read_graph_file(witness["g1"].get<std::string>());
    ell::Graph g2 = ell::read_graph_file(witness["g2"].get<std::string>());
    if (!ell::graphs_equal(ell::lex_product(g1, g2), g))
      ell::fail(ell::ErrorCode::witness_invalid,
                "graph is not the lexicographic product of the witness factors");
    auto mc = ell::brute_force_maxcut(g1);
    auto base = ell::certificate_from_cut(g1, mc.optimal_cuts.front());
    if (!base)
      ell::fail(ell::ErrorCode::pair_not_optimal,
                "the first factor's maximum cut does not certify it exact");
    cert = ell::lift_lex(base->x, base->y, g1, g2);
    extra["factor_maxcut"] = mc.value.str();
  } else if (method == "split-lift") {
    if (!witness.contains("base") || !witness.contains("p"))
      ell::fail(ell::ErrorCode::usage_error,
                "split-lift needs witness {\"base\": path, \"p\": [..]}");
    ell::Graph base_graph = ell::read_graph_file(witness["base"].get<std::string>());
    ell::SplitSpec spec{witness["p"].get<std::vector<int>>()};
    if (!ell::graphs_equal(ell::split(base_graph, spec).graph, g))
      ell::fail(ell::ErrorCode::witness_invalid,
                "graph is not the split of the witness base");
    auto mc = ell::brute_force_maxcut(base_graph);
    auto base = ell::certificate_from_cut(base_graph, mc.optimal_cuts.front());
    if (!base)
      ell::fail(ell::ErrorCode::pair_not_optimal,
                "the base graph's maximum cut does not certify it exact");
    cert = ell::lift_split_certificate(*base, spec);
    extra["base_maxcut"] = mc.value.str();
  } else {
    ell::fail(ell::ErrorCode::usage_error,
              "unknown method '" + method +
                  "' (join-balanced, join-unbalanced, nondominating, lex, split-lift)");
  }

  ell::VerificationReport rep = ell::verify_certificate(cert);
  json out{{"method", method},
           {"provenance", ell::provenance_name(cert.provenance)},
           {"objective", cert.objective.str()},
           {"verified", rep.optimal()},
           {"report", report_json(rep)}};
  for (auto& [k, v] : extra.items()) out[k] = v;
  if (dump) out["dump"] = dump_json(cert);
  return out;
}

}  // namespace

extern "C" {

const char* ell_status_name(ell_status s) {
  return ell::error_code_name(static_cast<ell::ErrorCode>(s));
}

const char* ell_last_error(void) { return g_last_error.c_str(); }

const char* ell_version(void) { return "1.0.0"; }

void ell_free_text(char* text) { std::free(text); }

ell_status ell_graph_read_file(const char* path, ell_graph** out) {
  return guarded([&] { *out = new ell_graph{ell::read_graph_file(path)}; });
}

ell_status ell_graph_from_text(const char* text, ell_graph** out) {
  return guarded([&] {
    std::istringstream in(text);
    *out = new ell_graph{ell::read_graph(in)};
  });
}

ell_status ell_graph_write_file(const ell_graph* g, const char* path) {
  return guarded([&] { ell::write_graph_file(path, g->g); });
}

ell_status ell_graph_to_text(const ell_graph* g, char** out_text) {
  return guarded([&] {
    std::ostringstream out;
    ell::write_graph(out, g->g);
    *out_text = dup_string(out.str());
  });
}

int ell_graph_order(const ell_graph* g) { return g ? g->g.n() : -1; }

int ell_graph_edge_count(const ell_graph* g) { return g ? g->g.edge_count() : -1; }

void ell_graph_free(ell_graph* g) { delete g; }

ell_status ell_gen_cycle(int n, ell_graph** out) {
  return guarded([&] { *out = new ell_graph{ell::cycle(n)}; });
}

ell_status ell_gen_path(int n, ell_graph** out) {
  return guarded([&] { *out = new ell_graph{ell::path(n)}; });
}

ell_status ell_gen_complete(int n, ell_graph** out) {
  return guarded([&] { *out = new ell_graph{ell::complete(n)}; });
}

ell_status ell_gen_edgeless(int n, ell_graph** out) {
  return guarded([&] { *out = new ell_graph{ell::edgeless(n)}; });
}

ell_status ell_gen_kpartite(const int* parts, int k, ell_graph** out) {
  return guarded([&] {
    *out = new ell_graph{ell::complete_kpartite(std::vector<int>(parts, parts + k))};
  });
}

ell_status ell_gen_wcomplete(const char* const* masses, int n, ell_graph** out) {
  return guarded([&] {
    std::vector<ell::Rational> m;
    for (int i = 0; i < n; ++i) m.push_back(ell::Rational::parse(masses[i]));
    *out = new ell_graph{ell::complete_weighted(m)};
  });
}

ell_status ell_gen_join(const ell_graph* a, const ell_graph* b, ell_graph** out) {
  return guarded([&] { *out = new ell_graph{ell::join(a->g, b->g)}; });
}

ell_status ell_gen_lex(const ell_graph* a, const ell_graph* b, ell_graph** out) {
  return guarded([&] { *out = new ell_graph{ell::lex_product(a->g, b->g)}; });
}

ell_status ell_gen_split(const ell_graph* g, const int* multiplicities, int n,
                         ell_graph** out) {
  return guarded([&] {
    ell::SplitSpec spec{std::vector<int>(multiplicities, multiplicities + n)};
    *out = new ell_graph{ell::split(g->g, spec).graph};
  });
}

ell_status ell_maxcut_json(const ell_graph* g, int all_cuts, char** out_json) {
  return guarded([&] {
    ell::MaxCutResult mc = ell::brute_force_maxcut(g->g);
    json out{{"value", mc.value.str()}, {"count", mc.count}};
    if (all_cuts) {
      json cuts = json::array();
      for (const auto& p : mc.optimal_cuts) cuts.push_back(partition_json(p));
      out["cuts"] = cuts;
    } else if (!mc.optimal_cuts.empty()) {
      out["cut"] = partition_json(mc.optimal_cuts.front());
    }
    *out_json = dup_string(out.dump());
  });
}

ell_status ell_phi_json(const ell_graph* g, double tol, char** out_json) {
  return guarded([&] {
    ell::PhiResult r = ell::solve_phi(g->g, tol);
    json out{{"phi", r.phi},
             {"primal_value", r.primal_value},
             {"gap", r.gap},
             {"iterations", r.iterations},
             {"tol", r.tol},
             {"dual_diag", r.dual_diag}};
    *out_json = dup_string(out.dump());
  });
}

ell_status ell_exactness_json(const ell_graph* g, double tol, char** out_json,
                              int* semantic_negative) {
  return guarded([&] {
    ell::ExactnessResult r = ell::exactness_numeric(g->g, tol);
    json out{{"verdict", ell::exactness_verdict_name(r.verdict)},
             {"phi", r.phi},
             {"maxcut", r.maxcut.str()},
             {"delta", r.delta},
             {"tol", r.tol}};
    *out_json = dup_string(out.dump());
    if (semantic_negative)
      *semantic_negative = r.verdict != ell::ExactnessVerdict::exact_within;
  });
}

ell_status ell_certify_json(const ell_graph* g, const char* method,
                            const char* witness_json, int dump, char** out_json) {
  return guarded([&] {
    json out = certify_impl(g->g, method ? method : "", witness_json, dump != 0);
    *out_json = dup_string(out.dump());
  });
}

ell_status ell_recognize_json(const ell_graph* g, char** out_json,
                              int* semantic_negative) {
  return guarded([&] {
    ell::RecognitionReport r = ell::recognize_complement_core(g->g);
    json out{{"matched", r.matched},
             {"reason", ell::recognition_reason_name(r.reason)}};
    if (r.value) out["value"] = r.value->str();
    if (r.cut) out["cut"] = partition_json(*r.cut);
    if (r.unique_cut) out["unique_cut"] = *r.unique_cut;
    *out_json = dup_string(out.dump());
    if (semantic_negative) *semantic_negative = !r.matched;
  });
}

ell_status ell_kpartite_json(const long long* parts, int k, char** out_json,
                             int* semantic_negative) {
  return guarded([&] {
    std::vector<long long> a(parts, parts + k);
    ell::KpartiteResult r = ell::kpartite_exactness(a);
    json out{{"verdict", ell::kpartite_verdict_name(r.verdict)}};
    if (r.verdict == ell::KpartiteVerdict::exact_non_unique) {
      out["witness"] = r.witness;
      json sums = json::array();
      for (int idx : r.witness) sums.push_back(a[idx]);
      out["witness_parts"] = sums;
    }
    *out_json = dup_string(out.dump());
    if (semantic_negative)
      *semantic_negative = r.verdict == ell::KpartiteVerdict::not_exact;
  });
}

ell_status ell_hardness(const long long* parts, int k, ell_graph** out) {
  return guarded([&] {
    *out = new ell_graph{ell::build_hardness_instance(std::vector<long long>(parts, parts + k))};
  });
}

ell_status ell_verify_decomp_json(const ell_graph* g, const char* witness_json,
                                  char** out_json, int* semantic_negative) {
  return guarded([&] {
    ell::SplitDecompWitness w = ell::parse_decomp_witness(witness_json ? witness_json : "");
    ell::DecompResult r = ell::verify_split_decomposable(g->g, w);
    json out{{"accepted", r.accepted},
             {"reason", ell::decomp_reason_name(r.reason)},
             {"detail", r.detail}};
    if (r.accepted) out["maxcut"] = r.maxcut.str();
    *out_json = dup_string(out.dump());
    if (semantic_negative) *semantic_negative = !r.accepted;
  });
}

ell_status ell_counterexample_json(int which, char** out_json) {
  return guarded([&] {
    ell::CounterexampleReport r = ell::replay_counterexample(which);
    json cuts = json::array();
    for (const auto& p : r.cuts) cuts.push_back(partition_json(p));
    json out{{"which", r.which},
             {"maxcut", r.maxcut.str()},
             {"cut_count", r.cut_count},
             {"cuts", cuts},
             {"objective", r.z_objective.str()},
             {"z_feasible", r.z_feasible},
             {"z_rank", r.z_rank},
             {"z01", r.z01.str()},
             {"decomposition", rational_list_json(r.coefficients)},
             {"decomposition_ok", r.decomposition_ok},
             {"dprime", rational_list_json(r.dprime)},
             {"xg_optimal", r.xg_optimal},
             {"all_ok", r.all_ok}};
    if (r.which == 2) out["outside_rank1_hull"] = r.outside_rank1_hull;
    *out_json = dup_string(out.dump());
  });
}

ell_status ell_suite_json(const char* name, const char* corpus_dir, char** out_json,
                          int* semantic_negative) {
  return guarded([&] {
    ell::SuiteReport r = ell::run_suite(name ? name : "", corpus_dir ? corpus_dir : "data");
    json cases = json::array();
    int passed = 0;
    for (const auto& c : r.cases) {
      cases.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      passed += c.pass ? 1 : 0;
    }
    json out{{"suite", r.suite},
             {"cases", cases},
             {"passed", passed},
             {"total", static_cast<int>(r.cases.size())},
             {"all_pass", r.all_pass}};
    *out_json = dup_string(out.dump());
    if (semantic_negative) *semantic_negative = !r.all_pass;
  });
}

}  // extern "C"
