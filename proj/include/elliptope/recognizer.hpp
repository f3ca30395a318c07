#ifndef ELLIPTOPE_RECOGNIZER_HPP
#define ELLIPTOPE_RECOGNIZER_HPP

#include <optional>
#include <string>
#include <vector>

#include "elliptope/certificates.hpp"
#include "elliptope/graph.hpp"
#include "elliptope/graph_ops.hpp"

namespace ell {

enum class RecognitionReason {
  adjacency_failed,
  degree_bound_failed,
  matched,
  matched_balanced,
};

const char* recognition_reason_name(RecognitionReason r);

struct RecognitionReport {
  bool matched = false;
  std::optional<VertexPartition> cut;
  std::optional<Rational> value;
  std::optional<bool> unique_cut;  // unset in the balanced case
  RecognitionReason reason = RecognitionReason::adjacency_failed;
};

// Complement-core recognition: largest connected component of G^c with the
// adjacency and degree conditions; ties broken by smallest vertex index.
RecognitionReport recognize_complement_core(const Graph& g);

enum class KpartiteVerdict { exact_unique, exact_non_unique, not_exact };

const char* kpartite_verdict_name(KpartiteVerdict v);

struct KpartiteResult {
  KpartiteVerdict verdict = KpartiteVerdict::not_exact;
  std::vector<int> witness;  // balanced subset indices when non-unique
};

// Parts must be sorted ascending.
KpartiteResult kpartite_exactness(const std::vector<long long>& a);

// K(a_1..a_n); rejects dominated instances where the reduction degenerates.
Graph build_hardness_instance(const std::vector<long long>& a);

struct SplitDecompWitness {
  SplitSpec multiplicities;   // for G
  Graph skeleton;             // unweighted core
  Rational uniform_weight;    // w
  int copies = 0;             // p >= 2
  std::vector<int> mapping;   // V(split(G)) -> V(split(skeleton, uniform p))
  std::optional<Certificate> skeleton_certificate;
};

enum class DecompReason {
  accepted,
  bad_multiplicities,
  bad_parameters,
  order_mismatch,
  mapping_not_bijection,
  missing_skeleton_edge,
  wrong_skeleton_weight,
  residual_placement,
  residual_too_heavy,
  skeleton_not_certified,
};

const char* decomp_reason_name(DecompReason r);

struct DecompResult {
  bool accepted = false;
  DecompReason reason = DecompReason::bad_parameters;
  std::string detail;
  Rational maxcut;  // w * maxcut of the unweighted skeleton, when accepted
};

DecompResult verify_split_decomposable(const Graph& g, const SplitDecompWitness& w);

// Witness JSON: {"multiplicities":[...], "skeleton":{"n":..,"edges":[[u,v],..]},
//                "w":"p/q", "p":.., "mapping":[...]}
SplitDecompWitness parse_decomp_witness(const std::string& json_text);

}  // namespace ell

#endif
