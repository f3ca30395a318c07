// Command-line front end over the shared-library C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "elliptope.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

struct GraphHandle {
  ell_graph* g = nullptr;
  ~GraphHandle() { ell_graph_free(g); }
};

struct TextHandle {
  char* text = nullptr;
  ~TextHandle() { ell_free_text(text); }
};

[[noreturn]] void die(ell_status st) {
  std::cerr << "error (" << ell_status_name(st) << "): " << ell_last_error() << "\n";
  std::exit(kExitError);
}

void check(ell_status st) {
  if (st != 0) die(st);
}

ell_graph* load_graph(const std::string& path) {
  ell_graph* g = nullptr;
  check(ell_graph_read_file(path.c_str(), &g));
  return g;
}

void emit_graph(ell_graph* g, const std::string& out_path) {
  if (out_path.empty()) {
    TextHandle t;
    check(ell_graph_to_text(g, &t.text));
    std::cout << t.text;
  } else {
    check(ell_graph_write_file(g, out_path.c_str()));
  }
}

std::vector<long long> parse_int_list(const std::string& csv) {
  std::vector<long long> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoll(tok));
  }
  if (out.empty()) {
    std::cerr << "error: empty integer list\n";
    std::exit(kExitError);
  }
  return out;
}

std::vector<std::string> parse_str_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(kExitError);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double default_tol() {
  if (const char* env = std::getenv("ELLIPTOPE_TOL")) {
    try {
      return std::stod(env);
    } catch (...) {
      std::cerr << "error: bad ELLIPTOPE_TOL value\n";
      std::exit(kExitError);
    }
  }
  return 1e-7;
}

std::string sides_to_string(const json& cut) {
  std::string a = "{", b = "{";
  for (size_t v = 0; v < cut.size(); ++v) {
    std::string& s = cut[v].get<int>() == 0 ? a : b;
    if (s.size() > 1) s += ",";
    s += std::to_string(v);
  }
  return a + "} | " + b + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elliptope: exactness certificates for the Max-Cut SDP relaxation"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  unsigned seed = 0;
  app.add_flag("--json", as_json, "emit one JSON document");
  app.add_option("--seed", seed, "solver seed (the solver is deterministic; recorded only)");

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate graphs in the edge-list format");
  gen->require_subcommand(1);
  gen->fallthrough();
  std::string gen_out;
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  int gen_n = 0;
  std::string gen_list, gen_a, gen_b, gen_p;

  auto* gen_cycle = gen->add_subcommand("cycle", "cycle C_n");
  gen_cycle->add_option("n", gen_n)->required();
  auto* gen_path = gen->add_subcommand("path", "path P_n");
  gen_path->add_option("n", gen_n)->required();
  auto* gen_complete = gen->add_subcommand("complete", "complete K_n");
  gen_complete->add_option("n", gen_n)->required();
  auto* gen_edgeless = gen->add_subcommand("edgeless", "edgeless graph");
  gen_edgeless->add_option("n", gen_n)->required();
  auto* gen_kpartite = gen->add_subcommand("kpartite", "complete k-partite K(a1,..,ak)");
  gen_kpartite->add_option("parts", gen_list, "comma list, e.g. 1,1,3")->required();
  auto* gen_wc = gen->add_subcommand("wcomplete", "complete graph weighted by m_i m_j");
  gen_wc->add_option("masses", gen_list, "comma list of rationals, e.g. 5,3,4,4")->required();
  auto* gen_join = gen->add_subcommand("join", "graph join of two graphs");
  gen_join->add_option("a", gen_a)->required();
  gen_join->add_option("b", gen_b)->required();
  auto* gen_lex = gen->add_subcommand("lex", "lexicographic product of two graphs");
  gen_lex->add_option("a", gen_a)->required();
  gen_lex->add_option("b", gen_b)->required();
  auto* gen_split = gen->add_subcommand("split", "split graph with multiplicities");
  gen_split->add_option("graph", gen_a)->required();
  gen_split->add_option("--p", gen_p, "comma list of multiplicities")->required();

  // ---- analyses -------------------------------------------------------------
  std::string path_arg, method, witness_path, corpus = "data";
  bool all_cuts = false, dump = false;
  double tol = default_tol();
  std::vector<std::string> list_arg;
  int which = 0;
  std::string suite_name;

  auto* maxcut = app.add_subcommand("maxcut", "exact maximum cut by enumeration");
  maxcut->add_option("graph", path_arg)->required();
  maxcut->add_flag("--all-cuts", all_cuts, "list every optimal partition");

  auto* phi = app.add_subcommand("phi", "numeric SDP relaxation value");
  phi->add_option("graph", path_arg)->required();
  phi->add_option("--tol", tol, "solver tolerance");

  auto* exactness = app.add_subcommand("exactness", "compare phi against the oracle");
  exactness->add_option("graph", path_arg)->required();
  exactness->add_option("--tol", tol, "solver tolerance");

  auto* certify = app.add_subcommand("certify", "construct and verify an exact certificate");
  certify->add_option("graph", path_arg)->required();
  certify->add_option("--method", method,
                      "join-balanced | join-unbalanced | nondominating | lex | split-lift")
      ->required();
  certify->add_option("--witness", witness_path, "witness JSON file");
  certify->add_flag("--dump", dump, "include X, Y, S in the output");

  auto* recognize = app.add_subcommand("recognize", "complement-core recognition");
  recognize->add_option("graph", path_arg)->required();

  auto* kpartite = app.add_subcommand("kpartite", "exactness of K(a1..ak), sorted parts");
  kpartite->add_option("parts", gen_list, "comma list, e.g. 1,2,3,4")->required();

  auto* hardness = app.add_subcommand("hardness", "hardness-reduction instance K(a1..ak)");
  hardness->add_option("parts", gen_list)->required();
  hardness->add_option("-o,--output", gen_out, "output file (default stdout)");

  auto* vdecomp = app.add_subcommand("verify-decomp", "witness-checked split decomposition");
  vdecomp->add_option("graph", path_arg)->required();
  vdecomp->add_option("--witness", witness_path, "witness JSON file")->required();

  auto* counter = app.add_subcommand("counterexample", "replay a counterexample (1 or 2)");
  counter->add_option("which", which)->required();

  auto* suite = app.add_subcommand("suite", "run a named invariant battery");
  suite->add_option("name", suite_name,
                    "phi-properties | certificates | counterexamples | recognizers")
      ->required();
  suite->add_option("--corpus", corpus, "corpus directory (default ./data)");

  CLI11_PARSE(app, argc, argv);
  (void)seed;

  if (gen->parsed()) {
    GraphHandle out;
    if (gen_cycle->parsed()) check(ell_gen_cycle(gen_n, &out.g));
    if (gen_path->parsed()) check(ell_gen_path(gen_n, &out.g));
    if (gen_complete->parsed()) check(ell_gen_complete(gen_n, &out.g));
    if (gen_edgeless->parsed()) check(ell_gen_edgeless(gen_n, &out.g));
    if (gen_kpartite->parsed()) {
      auto parts = parse_int_list(gen_list);
      std::vector<int> p(parts.begin(), parts.end());
      check(ell_gen_kpartite(p.data(), static_cast<int>(p.size()), &out.g));
    }
    if (gen_wc->parsed()) {
      auto masses = parse_str_list(gen_list);
      std::vector<const char*> ptrs;
      for (const auto& s : masses) ptrs.push_back(s.c_str());
      check(ell_gen_wcomplete(ptrs.data(), static_cast<int>(ptrs.size()), &out.g));
    }
    if (gen_join->parsed() || gen_lex->parsed()) {
      GraphHandle a{load_graph(gen_a)}, b{load_graph(gen_b)};
      check(gen_join->parsed() ? ell_gen_join(a.g, b.g, &out.g)
                               : ell_gen_lex(a.g, b.g, &out.g));
    }
    if (gen_split->parsed()) {
      GraphHandle g{load_graph(gen_a)};
      auto mult = parse_int_list(gen_p);
      std::vector<int> p(mult.begin(), mult.end());
      check(ell_gen_split(g.g, p.data(), static_cast<int>(p.size()), &out.g));
    }
    emit_graph(out.g, gen_out);
    return kExitOk;
  }

  if (maxcut->parsed()) {
    GraphHandle g{load_graph(path_arg)};
    TextHandle t;
    check(ell_maxcut_json(g.g, all_cuts ? 1 : 0, &t.text));
    if (as_json) {
      std::cout << t.text << "\n";
    } else {
      json r = json::parse(t.text);
      std::cout << "maxcut = " << r["value"].get<std::string>() << " ("
                << r["count"].get<long long>() << " optimal partition"
                << (r["count"].get<long long>() == 1 ? "" : "s") << ")\n";
      if (r.contains("cuts"))
        for (const auto& cut : r["cuts"]) std::cout << "  " << sides_to_string(cut) << "\n";
      else if (r.contains("cut"))
        std::cout << "  " << sides_to_string(r["cut"]) << "\n";
    }
    return kExitOk;
  }

  if (phi->parsed()) {
    GraphHandle g{load_graph(path_arg)};
    TextHandle t;
    check(ell_phi_json(g.g, tol, &t.text));
    if (as_json) {
      std::cout << t.text << "\n";
    } else {
      json r = json::parse(t.text);
      std::printf("phi = %.9f (gap %.2e, %d iterations)\n", r["phi"].get<double>(),
                  r["gap"].get<double>(), r["iterations"].get<int>());
    }
    return kExitOk;
  }

  if (exactness->parsed()) {
    GraphHandle g{load_graph(path_arg)};
    TextHandle t;
    int negative = 0;
    check(ell_exactness_json(g.g, tol, &t.text, &negative));
    if (as_json) {
      std::cout << t.text << "\n";
    } else {
      json r = json::parse(t.text);
      std::printf("%s: phi = %.9f, maxcut = %s, delta = %.3e\n",
                  r["verdict"].get<std::string>().c_str(), r["phi"].get<double>(),
                  r["maxcut"].get<std::string>().c_str(), r["delta"].get<double>());
    }
    return negative ? kExitNegative : kExitOk;
  }

  if (certify->parsed()) {
    GraphHandle g{load_graph(path_arg)};
    std::string witness = witness_path.empty() ? "" : read_file(witness_path);
    TextHandle t;
    check(ell_certify_json(g.g, method.c_str(), witness.empty() ? nullptr : witness.c_str(),
                           dump ? 1 : 0, &t.text));
    json r = json::parse(t.text);
    if (as_json) {
      std::cout << t.text << "\n";
    } else {
      std::cout << (r["verified"].get<bool>() ? "verified" : "NOT verified") << " "
                << r["provenance"].get<std::string>()
                << " certificate: objective " << r["objective"].get<std::string>()
                << ", gap " << r["report"]["duality_gap"].get<std::string>()
                << ", rank(X) = " << r["report"]["rank_x"].get<int>()
                << ", rank(S) = " << r["report"]["rank_s"].get<int>() << "\n";
      if (r.contains("unique"))
        std::cout << "uniqueness: " << r["unique"].get<std::string>() << "\n";
      if (dump) {
        std::cout << "Y diag:";
        for (const auto& v : r["dump"]["y_diag"]) std::cout << " " << v.get<std::string>();
        std::cout << "\nX lower triangle:\n";
        for (const auto& row : r["dump"]["x_lower"]) {
          for (size_t i = 0; i < row.size(); ++i)
            std::cout << (i ? " " : "") << row[i].get<std::string>();
          std::cout << "\n";
        }
      }
    }
    return r["verified"].get<bool>() ? kExitOk : kExitNegative;
  }

  if (recognize->parsed()) {
    GraphHandle g{load_graph(path_arg)};
    TextHandle t;
    int negative = 0;
    check(ell_recognize_json(g.g, &t.text, &negative));
    if (as_json) {
      std::cout << t.text << "\n";
    } else {
      json r = json::parse(t.text);
      if (r["matched"].get<bool>()) {
        std::cout << "matched (" << r["reason"].get<std::string>() << "): cut value "
                  << r["value"].get<std::string>();
        if (r.contains("unique_cut") && r["unique_cut"].get<bool>())
          std::cout << ", unique maximum cut";
        std::cout << "\n  " << sides_to_string(r["cut"]) << "\n";
      } else {
        std::cout << "not matched (" << r["reason"].get<std::string>() << ")\n";
      }
    }
    return negative ? kExitNegative : kExitOk;
  }

  if (kpartite->parsed()) {
    auto parts = parse_int_list(gen_list);
    TextHandle t;
    int negative = 0;
    check(ell_kpartite_json(parts.data(), static_cast<int>(parts.size()), &t.text, &negative));
    if (as_json) {
      std::cout << t.text << "\n";
    } else {
      json r = json::parse(t.text);
      std::cout << r["verdict"].get<std::string>();
      if (r.contains("witness_parts")) {
        std::cout << " (balanced subset:";
        for (const auto& v : r["witness_parts"]) std::cout << " " << v.get<long long>();
        std::cout << ")";
      }
      std::cout << "\n";
    }
    return negative ? kExitNegative : kExitOk;
  }

  if (hardness->parsed()) {
    auto parts = parse_int_list(gen_list);
    GraphHandle out;
    check(ell_hardness(parts.data(), static_cast<int>(parts.size()), &out.g));
    emit_graph(out.g, gen_out);
    return kExitOk;
  }

  if (vdecomp->parsed()) {
    GraphHandle g{load_graph(path_arg)};
    std::string witness = read_file(witness_path);
    TextHandle t;
    int negative = 0;
    check(ell_verify_decomp_json(g.g, witness.c_str(), &t.text, &negative));
    if (as_json) {
      std::cout << t.text << "\n";
    } else {
      json r = json::parse(t.text);
      if (r["accepted"].get<bool>())
        std::cout << "Accepted: maxcut = " << r["maxcut"].get<std::string>() << " ("
                  << r["detail"].get<std::string>() << ")\n";
      else
        std::cout << "Rejected (" << r["reason"].get<std::string>()
                  << "): " << r["detail"].get<std::string>() << "\n";
    }
    return negative ? kExitNegative : kExitOk;
  }

  if (counter->parsed()) {
    TextHandle t;
    check(ell_counterexample_json(which, &t.text));
    json r = json::parse(t.text);
    if (as_json) {
      std::cout << t.text << "\n";
    } else {
      std::cout << "counterexample " << which << ": maxcut = "
                << r["maxcut"].get<std::string>() << " with " << r["cut_count"].get<long long>()
                << " optimal partition" << (r["cut_count"].get<long long>() == 1 ? "" : "s")
                << "\n";
      std::cout << "replayed optimum: objective " << r["objective"].get<std::string>()
                << ", rank " << r["z_rank"].get<int>() << ", feasible "
                << (r["z_feasible"].get<bool>() ? "yes" : "no") << "\n";
      std::cout << "decomposition coefficients:";
      for (const auto& v : r["decomposition"]) std::cout << " " << v.get<std::string>();
      std::cout << "  (entrywise exact: " << (r["decomposition_ok"].get<bool>() ? "yes" : "no")
                << ")\n";
      std::cout << "d':";
      for (const auto& v : r["dprime"]) std::cout << " " << v.get<std::string>();
      std::cout << "\n";
      if (r.contains("outside_rank1_hull"))
        std::cout << "outside conv{rank-1 optima} via entry (1,2) = "
                  << r["z01"].get<std::string>() << ": "
                  << (r["outside_rank1_hull"].get<bool>() ? "yes" : "no") << "\n";
      std::cout << "all checks: " << (r["all_ok"].get<bool>() ? "pass" : "FAIL") << "\n";
    }
    return r["all_ok"].get<bool>() ? kExitOk : kExitNegative;
  }

  if (suite->parsed()) {
    TextHandle t;
    int negative = 0;
    check(ell_suite_json(suite_name.c_str(), corpus.c_str(), &t.text, &negative));
    json r = json::parse(t.text);
    if (as_json) {
      std::cout << t.text << "\n";
    } else {
      for (const auto& c : r["cases"]) {
        std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ")
                  << c["name"].get<std::string>();
        if (!c["pass"].get<bool>()) std::cout << ": " << c["detail"].get<std::string>();
        std::cout << "\n";
      }
      std::cout << r["passed"].get<int>() << "/" << r["total"].get<int>() << " cases passed\n";
    }
    return negative ? kExitNegative : kExitOk;
  }

  return kExitError;
}
