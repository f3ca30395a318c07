#include "elliptope/suite.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "elliptope/certificates.hpp"
#include "elliptope/error.hpp"
#include "elliptope/oracle.hpp"
#include "elliptope/recognizer.hpp"
#include "elliptope/sdp.hpp"

namespace ell {

namespace {

void run_case(SuiteReport& rep, const std::string& name, const std::function<std::string()>& body) {
  SuiteCase c;
  c.name = name;
  try {
    c.detail = body();  // empty detail = pass
    c.pass = c.detail.empty();
  } catch (const Error& e) {
    c.pass = false;
    c.detail = std::string(error_code_name(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = e.what();
  }
  rep.cases.push_back(std::move(c));
}

std::string check_certificate_against_oracle(const Certificate& cert) {
  VerificationReport v = verify_certificate(cert);
  if (!v.optimal()) return "certificate did not verify optimal";
  if (cert.source_graph.n() <= 12) {
    MaxCutResult mc = brute_force_maxcut(cert.source_graph);
    if (mc.value != v.objective)
      return "objective " + v.objective.str() + " != oracle " + mc.value.str();
  }
  if (!rank_identity_check(cert.x, cert.s)) return "rank identity failed";
  return {};
}

Graph load(const std::string& dir, const std::string& file) {
  return read_graph_file(dir + "/" + file);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph fig3_side_a(char which) {
  Graph a(3);
  if (which == 'a') {  // path A-B-C
    a.add_edge(0, 1, Rational(1));
    a.add_edge(1, 2, Rational(1));
  } else {  // triangle
    a.add_edge(0, 1, Rational(1));
    a.add_edge(1, 2, Rational(1));
    a.add_edge(0, 2, Rational(1));
  }
  return a;
}

Graph fig3_side_b(char which) {
  Graph b(3);
  if (which == 'a') {  // path D-E-F as edges DE, EF
    b.add_edge(0, 1, Rational(1));
    b.add_edge(1, 2, Rational(1));
  } else {  // single edge DE
    b.add_edge(0, 1, Rational(1));
  }
  return b;
}

void suite_counterexamples(SuiteReport& rep) {
  for (int which : {1, 2})
    run_case(rep, "counterexample-" + std::to_string(which), [&] {
      CounterexampleReport r = replay_counterexample(which);
      return r.all_ok ? std::string{} : "replay checks failed";
    });
}

void suite_certificates(SuiteReport& rep, const std::string& dir) {
  run_case(rep, "join-balanced C5 v C5c", [&] {
    return check_certificate_against_oracle(cert_join_balanced(cycle(5), complement(cycle(5))));
  });
  run_case(rep, "join-balanced K3bar v K3bar", [&] {
    return check_certificate_against_oracle(cert_join_balanced(edgeless(3), edgeless(3)));
  });
  run_case(rep, "join-balanced fig3a", [&] {
    Graph ga = fig3_side_a('a'), gb = fig3_side_b('a');
    if (!graphs_equal(join(ga, gb), load(dir, "fig3a.g")))
      return std::string("fig3a.g does not match its construction");
    return check_certificate_against_oracle(cert_join_balanced(ga, gb));
  });
  run_case(rep, "join-balanced fig3b unique", [&] {
    Graph ga = fig3_side_a('b'), gb = fig3_side_b('b');
    if (!graphs_equal(join(ga, gb), load(dir, "fig3b.g")))
      return std::string("fig3b.g does not match its construction");
    if (uniqueness_join_balanced(ga, gb) != Uniqueness::guaranteed_unique)
      return std::string("expected GuaranteedUnique");
    if (brute_force_maxcut(join(ga, gb)).count != 1)
      return std::string("oracle found more than one optimal cut");
    return check_certificate_against_oracle(cert_join_balanced(ga, gb));
  });
  run_case(rep, "join-unbalanced cone C4 v K5bar", [&] {
    Graph gp = join(cycle(4), edgeless(5));
    if (!graphs_equal(gp, load(dir, "cone45.g")))
      return std::string("cone45.g does not match its construction");
    return check_certificate_against_oracle(cert_join_unbalanced(cycle(4), edgeless(5)));
  });
  run_case(rep, "join-unbalanced fan P4 v K6bar", [&] {
    Graph gp = join(path(4), edgeless(6));
    if (!graphs_equal(gp, load(dir, "fan46.g")))
      return std::string("fan46.g does not match its construction");
    return check_certificate_against_oracle(cert_join_unbalanced(path(4), edgeless(6)));
  });
  run_case(rep, "join-unbalanced K4 v C8", [&] {
    return check_certificate_against_oracle(cert_join_unbalanced(complete(4), cycle(8)));
  });
  run_case(rep, "nondominating masses", [&] {
    for (auto& m : std::vector<std::vector<Rational>>{
             {5, 3, 4, 4}, {2, 2, 4, 4}, {1, 2, 3, 4}, {Rational(1, 2), 1, Rational(5, 4)}}) {
      Certificate c = cert_nondominating(m);
      VerificationReport v = verify_certificate(c);
      if (!v.optimal()) return std::string("construction did not verify");
      if (v.rank_x != static_cast<int>(m.size()) - 1)
        return std::string("rank is not n-1");
    }
    return std::string{};
  });
  run_case(rep, "lex lift P2 * P2", [&] {
    Graph g1 = path(2);
    auto base = certificate_from_cut(g1, brute_force_maxcut(g1).optimal_cuts[0]);
    if (!base) return std::string("base pair missing");
    Certificate c = lift_lex(base->x, base->y, g1, path(2));
    if (!graphs_equal(c.source_graph, complete(4))) return std::string("P2*P2 should be K4");
    return check_certificate_against_oracle(c);
  });
  run_case(rep, "lex lift K22 * K3 matches corpus", [&] {
    Graph g1 = complete_kpartite({2, 2});
    auto base = certificate_from_cut(g1, brute_force_maxcut(g1).optimal_cuts[0]);
    if (!base) return std::string("base pair missing");
    Certificate c = lift_lex(base->x, base->y, g1, complete(3));
    return check_certificate_against_oracle(c);
  });
  run_case(rep, "split lift of counter2 onto K(2,2,4,4)", [&] {
    Certificate base = cert_nondominating({2, 2, 4, 4});
    SplitSpec spec{{2, 2, 4, 4}};
    Certificate lifted = lift_split_certificate(base, spec);
    VerificationReport v = verify_certificate(lifted);
    if (!v.optimal()) return std::string("lifted certificate did not verify");
    if (v.rank_x != 3) return std::string("split lift changed the rank");
    if (!graphs_equal(lifted.source_graph, complete_kpartite({2, 2, 4, 4})))
      return std::string("split of weighted K4 is not K(2,2,4,4)");
    return std::string{};
  });
  run_case(rep, "corpus counterexample files", [&] {
    if (!graphs_equal(load(dir, "counter1.g"), complete_weighted({5, 3, 4, 4})))
      return std::string("counter1.g mismatch");
    if (!graphs_equal(load(dir, "counter2.g"), complete_weighted({2, 2, 4, 4})))
      return std::string("counter2.g mismatch");
    if (!graphs_equal(load(dir, "k3lexp3.g"), lex_product(complete(3), path(3))))
      return std::string("k3lexp3.g mismatch");
    if (!graphs_equal(load(dir, "k1234.g"), complete_kpartite({1, 2, 3, 4})))
      return std::string("k1234.g mismatch");
    return std::string{};
  });
}

void suite_recognizers(SuiteReport& rep, const std::string& dir) {
  for (int m = 4; m <= 6; ++m)
    for (int n = std::max(4, m); n <= 7; ++n) {
      run_case(rep, "cone C" + std::to_string(m) + " v K" + std::to_string(n) + "bar", [&] {
        Graph g = join(cycle(m), edgeless(n));
        RecognitionReport r = recognize_complement_core(g);
        if (!r.matched) return std::string("did not match");
        MaxCutResult mc = brute_force_maxcut(g);
        if (*r.value != mc.value) return std::string("value != oracle");
        if (m != n && mc.count != 1) return std::string("oracle cut not unique");
        return std::string{};
      });
      run_case(rep, "fan P" + std::to_string(m) + " v K" + std::to_string(n) + "bar", [&] {
        Graph g = join(path(m), edgeless(n));
        RecognitionReport r = recognize_complement_core(g);
        if (!r.matched) return std::string("did not match");
        MaxCutResult mc = brute_force_maxcut(g);
        if (*r.value != mc.value) return std::string("value != oracle");
        if (m != n && mc.count != 1) return std::string("oracle cut not unique");
        return std::string{};
      });
    }
  run_case(rep, "declines K3", [&] {
    RecognitionReport r = recognize_complement_core(complete(3));
    return (!r.matched && r.reason == RecognitionReason::adjacency_failed)
               ? std::string{}
               : std::string("expected AdjacencyFailed");
  });
  run_case(rep, "declines C5", [&] {
    RecognitionReport r = recognize_complement_core(cycle(5));
    return !r.matched ? std::string{} : std::string("expected a decline");
  });
  run_case(rep, "kpartite verdicts", [&] {
    if (kpartite_exactness({1, 2, 3, 4}).verdict != KpartiteVerdict::exact_non_unique)
      return std::string("(1,2,3,4) should be ExactNonUnique");
    if (kpartite_exactness({1, 1, 3}).verdict != KpartiteVerdict::exact_unique)
      return std::string("(1,1,3) should be ExactUnique");
    if (kpartite_exactness({2, 3, 4}).verdict != KpartiteVerdict::not_exact)
      return std::string("(2,3,4) should be NotExact");
    return std::string{};
  });
  run_case(rep, "split decomposition of the example graph", [&] {
    Graph g = load(dir, "example11.g");
    SplitDecompWitness w = parse_decomp_witness(read_text(dir + "/example11_witness.json"));
    DecompResult res = verify_split_decomposable(g, w);
    if (!res.accepted) return "rejected: " + res.detail;
    MaxCutResult mc = brute_force_maxcut(g);
    if (res.maxcut != mc.value) return std::string("returned value != oracle");
    return std::string{};
  });
}

void suite_phi_properties(SuiteReport& rep, const std::string& dir) {
  run_case(rep, "phi properties on C5", [&] {
    PhiPropertyReport r = phi_property_suite(cycle(5), Rational(3), SplitSpec{{2, 1, 1, 1, 1}});
    return r.all_ok() ? std::string{} : std::string("a phi property failed");
  });
  run_case(rep, "phi properties on counter1", [&] {
    PhiPropertyReport r = phi_property_suite(complete_weighted({5, 3, 4, 4}), Rational(1, 2),
                                             SplitSpec{{1, 2, 1, 1}});
    return r.all_ok() ? std::string{} : std::string("a phi property failed");
  });
  run_case(rep, "solver agrees with the K(3,3) certificate", [&] {
    double phi = solve_phi(complete_kpartite({3, 3}), 1e-7).phi;
    return std::fabs(phi - 9.0) <= 1e-5 ? std::string{} : std::string("phi(K33) != 9");
  });
  run_case(rep, "lex product gap K3 * P3", [&] {
    Graph g = load(dir, "k3lexp3.g");
    double phi = solve_phi(g, 1e-7).phi;
    if (std::fabs(phi - 20.25) > 1e-4) return std::string("phi != 20.25");
    ExactnessResult r = exactness_numeric(g, 1e-5);
    return r.verdict == ExactnessVerdict::gap_at_least ? std::string{}
                                                       : std::string("expected GapAtLeast");
  });
}

}  // namespace

SuiteReport run_suite(const std::string& name, const std::string& corpus_dir) {
  SuiteReport rep;
  rep.suite = name;
  if (name == "counterexamples")
    suite_counterexamples(rep);
  else if (name == "certificates")
    suite_certificates(rep, corpus_dir);
  else if (name == "recognizers")
    suite_recognizers(rep, corpus_dir);
  else if (name == "phi-properties")
    suite_phi_properties(rep, corpus_dir);
  else
    fail(ErrorCode::usage_error,
         "unknown suite '" + name +
             "' (expected phi-properties, certificates, counterexamples, recognizers)");
  rep.all_pass = true;
  for (const auto& c : rep.cases) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

}  // namespace ell
