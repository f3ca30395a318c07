#ifndef ELLIPTOPE_CERTIFICATES_HPP
#define ELLIPTOPE_CERTIFICATES_HPP

#include <optional>
#include <vector>

#include "elliptope/graph.hpp"
#include "elliptope/graph_ops.hpp"
#include "elliptope/linalg.hpp"

namespace ell {

enum class Provenance {
  join_balanced,
  join_unbalanced,
  non_dominating,
  split_lift,
  lex_lift,
  manual,
};

const char* provenance_name(Provenance p);

// Primal candidate X, diagonal dual Y, slack S = Y - L/4, all exact.
struct Certificate {
  SymMatrix x, y, s;
  Rational objective;  // <L,X>/4
  Provenance provenance = Provenance::manual;
  Graph source_graph;
};

struct VerificationReport {
  bool feasible_primal = false;  // diag(X) = 1 and X PSD
  bool feasible_dual = false;    // Y diagonal, S = Y - L/4, S PSD
  PsdWitness primal_witness;
  PsdWitness dual_witness;
  Rational objective;      // <L,X>/4, recomputed
  Rational duality_gap;    // tr(Y) - objective
  bool complementary_slackness = false;  // X S = 0 entrywise
  int rank_x = 0, rank_s = 0, shared_nullity = 0;

  bool optimal() const {
    return feasible_primal && feasible_dual && duality_gap.is_zero() &&
           complementary_slackness;
  }
};

Certificate make_certificate(const Graph& g, SymMatrix x, SymMatrix y, Provenance prov);

SymMatrix primal_from_cut(const Graph& g, const VertexPartition& p);

VerificationReport verify_certificate(const Certificate& c);

// rank(X) + rank(S) == n - dim(N(X) cap N(S)); requires X S = 0.
bool rank_identity_check(const SymMatrix& x, const SymMatrix& s);

Certificate cert_join_balanced(const Graph& ga, const Graph& gb);

enum class Uniqueness { guaranteed_unique, inconclusive };
Uniqueness uniqueness_join_balanced(const Graph& ga, const Graph& gb);

Certificate cert_join_unbalanced(const Graph& ga, const Graph& gb);

struct HigherRankResult {
  SymMatrix x1, x2, x_mid, y;
  Rational objective;
  VertexPartition cut1, cut2;
};

// Needs complete-cross bipartition witnesses of both sides; returns two
// distinct rank-1 optima and their rank-2 midpoint, all certified against
// the common dual Y = ((m1+m2)/4) I.
HigherRankResult higher_rank_join(const Graph& ga, const Graph& gb,
                                  const VertexPartition& pa, const VertexPartition& pb);

bool verify_spanning_biclique_witness(const Graph& g, const VertexPartition& p);

// Intermediate quantities of the rank-(n-1) construction, for inspection.
struct NonDominatingData {
  std::vector<std::vector<Rational>> u;  // u[i][j]
  std::vector<Rational> eps;
  Rational t;
  std::vector<Rational> dprime;
  Rational total_mass;
};

Certificate cert_nondominating(const std::vector<Rational>& m,
                               NonDominatingData* data = nullptr);

struct CounterexampleReport {
  int which = 0;
  Rational maxcut;
  long long cut_count = 0;
  std::vector<VertexPartition> cuts;
  SymMatrix z;             // the replayed higher-rank optimum
  Rational z_objective;
  bool z_feasible = false;
  int z_rank = 0;
  std::vector<Rational> coefficients;  // convex decomposition weights
  bool decomposition_ok = false;
  std::vector<Rational> dprime;
  Rational z01;            // coordinate certifying hull membership questions
  bool outside_rank1_hull = false;  // meaningful for which == 2
  bool xg_optimal = false;          // the constructed rank n-1 matrix verifies
  bool all_ok = false;
};

CounterexampleReport replay_counterexample(int which);

SymMatrix lift_split(const SymMatrix& x, const SplitSpec& spec, const Graph& g);

// Full primal/dual lift through a split: clone a of u gets Y_uu / p_u.
Certificate lift_split_certificate(const Certificate& c, const SplitSpec& spec);

Certificate lift_lex(const SymMatrix& x, const SymMatrix& ybar, const Graph& g1,
                     const Graph& g2);

bool delta_identity_check(const Graph& g, const Certificate& c);

// Rank-1 certificate from a cut with the forced diagonal dual
// Y_ii = x_i (L x)_i / 4; nullopt when the slack is not PSD.
std::optional<Certificate> certificate_from_cut(const Graph& g, const VertexPartition& p);

}  // namespace ell

#endif
