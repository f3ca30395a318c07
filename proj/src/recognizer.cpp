#include "elliptope/recognizer.hpp"

#include <algorithm>

#include "elliptope/error.hpp"
#include "elliptope/oracle.hpp"
#include "json.hpp"

namespace ell {

const char* recognition_reason_name(RecognitionReason r) {
  switch (r) {
    case RecognitionReason::adjacency_failed: return "AdjacencyFailed";
    case RecognitionReason::degree_bound_failed: return "DegreeBoundFailed";
    case RecognitionReason::matched: return "Matched";
    case RecognitionReason::matched_balanced: return "MatchedBalanced";
  }
  return "Unknown";
}

const char* kpartite_verdict_name(KpartiteVerdict v) {
  switch (v) {
    case KpartiteVerdict::exact_unique: return "ExactUnique";
    case KpartiteVerdict::exact_non_unique: return "ExactNonUnique";
    case KpartiteVerdict::not_exact: return "NotExact";
  }
  return "Unknown";
}

const char* decomp_reason_name(DecompReason r) {
  switch (r) {
    case DecompReason::accepted: return "Accepted";
    case DecompReason::bad_multiplicities: return "BadMultiplicities";
    case DecompReason::bad_parameters: return "BadParameters";
    case DecompReason::order_mismatch: return "OrderMismatch";
    case DecompReason::mapping_not_bijection: return "MappingNotBijection";
    case DecompReason::missing_skeleton_edge: return "MissingSkeletonEdge";
    case DecompReason::wrong_skeleton_weight: return "WrongSkeletonWeight";
    case DecompReason::residual_placement: return "ResidualPlacement";
    case DecompReason::residual_too_heavy: return "ResidualTooHeavy";
    case DecompReason::skeleton_not_certified: return "SkeletonNotCertified";
  }
  return "Unknown";
}

RecognitionReport recognize_complement_core(const Graph& g) {
  if (!g.is_unweighted())
    fail(ErrorCode::not_unweighted, "recognize_complement_core needs an unweighted graph");
  RecognitionReport rep;
  int n = g.n();
  if (n == 0) return rep;

  Graph gc = complement(g);
  auto comps = connected_components(gc);
  // components come ordered by smallest member; keep the first largest
  const std::vector<int>* best = &comps[0];
  for (const auto& c : comps)
    if (c.size() > best->size()) best = &c;
  const std::vector<int>& core = *best;

  int vs = static_cast<int>(core.size());
  int rest = n - vs;
  if (vs < rest) {
    rep.reason = RecognitionReason::adjacency_failed;
    return rep;
  }

  VertexPartition cut;
  cut.side.assign(n, 1);
  for (int v : core) cut.side[v] = 0;
  cut = cut.canonical();

  if (vs == rest) {
    rep.matched = true;
    rep.reason = RecognitionReason::matched_balanced;
    rep.cut = cut;
    rep.value = Rational(static_cast<long>(vs) * rest);
    return rep;  // unique_cut deliberately unset
  }

  // degree bound, in the complement: deg >= |V'| - floor(rest/2) - 1
  long threshold = vs - rest / 2 - 1;
  for (int v : core) {
    Rational deg = degree(gc, v);
    if (deg < Rational(threshold)) {
      rep.reason = RecognitionReason::degree_bound_failed;
      return rep;
    }
  }

  // core spanning all of V passes the bound only for edgeless G, where the
  // uniqueness conclusion is empty
  if (rest == 0) {
    rep.reason = RecognitionReason::adjacency_failed;
    return rep;
  }

  rep.matched = true;
  rep.reason = RecognitionReason::matched;
  rep.cut = cut;
  rep.value = Rational(static_cast<long>(vs) * rest);
  rep.unique_cut = true;
  return rep;
}

KpartiteResult kpartite_exactness(const std::vector<long long>& a) {
  if (a.empty()) fail(ErrorCode::empty_part_list, "kpartite_exactness needs parts");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) fail(ErrorCode::bad_size, "part sizes must be positive");
    if (i > 0 && a[i] < a[i - 1])
      fail(ErrorCode::unsorted, "parts must be sorted ascending");
  }
  KpartiteResult res;
  if (auto s = exact_sum_decision(a)) {
    res.verdict = KpartiteVerdict::exact_non_unique;
    res.witness = *s;
    return res;
  }
  long long total = 0;
  for (long long x : a) total += x;
  if (a.back() >= total - a.back()) {
    res.verdict = KpartiteVerdict::exact_unique;
    return res;
  }
  res.verdict = KpartiteVerdict::not_exact;
  return res;
}

Graph build_hardness_instance(const std::vector<long long>& a) {
  if (a.empty()) fail(ErrorCode::empty_part_list, "hardness instance needs parts");
  long long total = 0, mx = 0;
  for (long long x : a) {
    if (x <= 0) fail(ErrorCode::bad_size, "part sizes must be positive");
    total += x;
    mx = std::max(mx, x);
  }
  if (mx > total - mx)
    fail(ErrorCode::degenerate_instance,
         "dominated instance: the reduction's equivalence degenerates");
  std::vector<int> parts(a.begin(), a.end());
  return complete_kpartite(parts);
}

namespace {

// Is g complete multipartite? If so return the sorted part sizes.
std::optional<std::vector<long long>> multipartite_parts(const Graph& g) {
  if (!g.is_unweighted()) return std::nullopt;
  Graph gc = complement(g);
  auto comps = connected_components(gc);
  std::vector<long long> sizes;
  for (const auto& comp : comps) {
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = i + 1; j < comp.size(); ++j)
        if (!gc.has_edge(comp[i], comp[j])) return std::nullopt;  // not a clique
    sizes.push_back(static_cast<long long>(comp.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool skeleton_exactness_established(const Graph& skel,
                                    const std::optional<Certificate>& provided,
                                    std::string* how) {
  if (provided) {
    if (graphs_equal(provided->source_graph, skel) &&
        verify_certificate(*provided).optimal()) {
      *how = "caller-provided certificate";
      return true;
    }
    return false;
  }
  if (recognize_complement_core(skel).matched) {
    *how = "complement-core recognizer";
    return true;
  }
  if (auto parts = multipartite_parts(skel)) {
    if (kpartite_exactness(*parts).verdict != KpartiteVerdict::not_exact) {
      *how = "complete multipartite criterion";
      return true;
    }
  }
  return false;
}

}  // namespace

DecompResult verify_split_decomposable(const Graph& g, const SplitDecompWitness& w) {
  DecompResult res;

  if (static_cast<int>(w.multiplicities.multiplicities.size()) != g.n()) {
    res.reason = DecompReason::bad_multiplicities;
    res.detail = "multiplicity vector does not cover V(G)";
    return res;
  }
  for (int p : w.multiplicities.multiplicities)
    if (p < 1) {
      res.reason = DecompReason::bad_multiplicities;
      res.detail = "multiplicities must be >= 1";
      return res;
    }
  if (w.copies < 2 || w.uniform_weight.sign() <= 0 || !w.skeleton.is_unweighted()) {
    res.reason = DecompReason::bad_parameters;
    res.detail = "need p >= 2, w > 0, and an unweighted skeleton";
    return res;
  }

  SplitResult gt = split(g, w.multiplicities);
  int big_n = gt.graph.n();
  int p = w.copies;
  if (big_n != w.skeleton.n() * p) {
    res.reason = DecompReason::order_mismatch;
    res.detail = "split(G) and split(skeleton) have different orders";
    return res;
  }

  if (static_cast<int>(w.mapping.size()) != big_n) {
    res.reason = DecompReason::mapping_not_bijection;
    res.detail = "mapping length mismatch";
    return res;
  }
  std::vector<char> hit(big_n, 0);
  for (int img : w.mapping) {
    if (img < 0 || img >= big_n || hit[img]) {
      res.reason = DecompReason::mapping_not_bijection;
      res.detail = "mapping is not a bijection";
      return res;
    }
    hit[img] = 1;
  }
  std::vector<int> inv(big_n);
  for (int v = 0; v < big_n; ++v) inv[w.mapping[v]] = v;

  Rational expected = w.uniform_weight / Rational(static_cast<long>(p) * p);

  // every clone pair over a skeleton edge must be present at exactly w/p^2
  for (const auto& [e, _] : w.skeleton.edges())
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        int x = inv[e.first * p + a], y = inv[e.second * p + b];
        if (!gt.graph.has_edge(x, y)) {
          res.reason = DecompReason::missing_skeleton_edge;
          res.detail = "skeleton clone pair absent in split(G)";
          return res;
        }
        if (gt.graph.weight(x, y) != expected) {
          res.reason = DecompReason::wrong_skeleton_weight;
          res.detail = "skeleton clone pair has wrong weight";
          return res;
        }
      }

  // residual edges stay inside one clone class and stay light
  for (const auto& [e, wt] : gt.graph.edges()) {
    int cu = w.mapping[e.first] / p, cv = w.mapping[e.second] / p;
    if (cu != cv && w.skeleton.has_edge(cu, cv)) continue;  // part of S'
    if (cu != cv) {
      res.reason = DecompReason::residual_placement;
      res.detail = "residual edge spans two clone classes";
      return res;
    }
    if (wt > expected) {
      res.reason = DecompReason::residual_too_heavy;
      res.detail = "residual edge heavier than w/p^2";
      return res;
    }
  }

  std::string how;
  if (!skeleton_exactness_established(w.skeleton, w.skeleton_certificate, &how)) {
    res.reason = DecompReason::skeleton_not_certified;
    res.detail = "skeleton exactness could not be established";
    return res;
  }

  res.accepted = true;
  res.reason = DecompReason::accepted;
  res.detail = "skeleton exact via " + how;
  res.maxcut = w.uniform_weight * brute_force_maxcut(w.skeleton).value;
  return res;
}

SplitDecompWitness parse_decomp_witness(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail(ErrorCode::parse_error, std::string("witness json: ") + e.what());
  }
  try {
    SplitDecompWitness w;
    w.multiplicities.multiplicities = j.at("multiplicities").get<std::vector<int>>();
    int ns = j.at("skeleton").at("n").get<int>();
    Graph skel(ns);
    for (const auto& e : j.at("skeleton").at("edges"))
      skel.add_edge(e.at(0).get<int>(), e.at(1).get<int>(), Rational(1));
    w.skeleton = skel;
    w.uniform_weight = Rational::parse(j.at("w").get<std::string>());
    w.copies = j.at("p").get<int>();
    w.mapping = j.at("mapping").get<std::vector<int>>();
    return w;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorCode::parse_error, std::string("witness json: ") + e.what());
  }
}

}  // namespace ell
