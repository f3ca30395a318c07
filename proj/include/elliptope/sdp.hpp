#ifndef ELLIPTOPE_SDP_HPP
#define ELLIPTOPE_SDP_HPP

#include <vector>

#include "elliptope/graph.hpp"
#include "elliptope/graph_ops.hpp"
#include "elliptope/oracle.hpp"

namespace ell {

struct PhiResult {
  double phi = 0.0;
  std::vector<double> dual_diag;  // diagonal of Y
  double primal_value = 0.0;
  double gap = 0.0;  // dual bound - primal value, >= -tol
  int iterations = 0;
  double tol = 0.0;
};

// Relaxation value via a primal-dual interior-point method on the
// unit-diagonal SDP. Deterministic; n caps at 256.
PhiResult solve_phi(const Graph& g, double tol = 1e-7);

enum class ExactnessVerdict { exact_within, gap_at_least, undecided };

const char* exactness_verdict_name(ExactnessVerdict v);

struct ExactnessResult {
  ExactnessVerdict verdict = ExactnessVerdict::undecided;
  double phi = 0.0;
  Rational maxcut;
  double delta = 0.0;  // phi - maxcut
  double tol = 0.0;
};

ExactnessResult exactness_numeric(const Graph& g, double tol = 1e-7);

struct PhiPropertyReport {
  bool scaling_ok = false;
  bool monotonicity_ok = false;
  bool split_ok = false;
  double phi = 0.0, phi_scaled = 0.0, phi_monotone = 0.0, phi_split = 0.0;
  double tol = 0.0;

  bool all_ok() const { return scaling_ok && monotonicity_ok && split_ok; }
};

// Scaling, monotonicity (one seeded weight increase), and split invariance.
PhiPropertyReport phi_property_suite(const Graph& g, const Rational& k,
                                     const SplitSpec& spec, double tol = 1e-5,
                                     unsigned seed = 1);

}  // namespace ell

#endif
