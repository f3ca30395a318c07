#ifndef ELLIPTOPE_LINALG_HPP
#define ELLIPTOPE_LINALG_HPP

#include <vector>

#include "elliptope/matrix.hpp"

namespace ell {

// Outcome of the exact PSD semidecision. On PSD the pivoted factorization
// P^T M P = L D L^T is recorded (permutation, unit-lower factor, nonnegative
// pivots); on NotPSD a rational direction v with v^T M v < 0 is recorded.
struct PsdWitness {
  bool psd = false;
  std::vector<int> perm;                        // PSD: pivot order
  std::vector<std::vector<Rational>> unit_lower;  // PSD: L (full n x n)
  std::vector<Rational> pivots;                 // PSD: diagonal of D
  std::vector<Rational> violator;               // NotPSD: v with v^T M v < 0
  Rational violation;                           // NotPSD: value of v^T M v

  // Re-evaluates the stored record against M, exactly.
  bool reproduces(const SymMatrix& m) const;
};

PsdWitness psd_check_exact(const SymMatrix& m);

int rank_exact(const SymMatrix& m);
std::vector<std::vector<Rational>> nullspace_basis(const SymMatrix& m);

// General rectangular exact kernels used across modules.
int rank_exact_rect(std::vector<std::vector<Rational>> rows);
// Solve A z = b exactly; nullopt when inconsistent. A need not be square.
std::optional<std::vector<Rational>> solve_exact(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b);

SymMatrix pseudo_inverse(const SymMatrix& m);

struct SchurPsdReport {
  PsdWitness witness;       // verdict for the whole matrix
  bool range_ok = false;    // range(C^T) subseteq range(B)
  int rank_lower_bound = 0;  // rank(B) + rank(A - C B+ C^T), valid when PSD
};

// PSD check of [[A, C],[C^T, B]] via the pseudo-Schur complement route.
SchurPsdReport schur_psd_check(const SymMatrix& m, int na, int nb);

SymMatrix kron(const SymMatrix& a, const SymMatrix& b);

struct EigenResult {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] pairs with values[k]
};

// Cyclic Jacobi; residual ||Mv - lambda v||_inf <= tol * ||M||_inf per pair.
EigenResult eigen_sym(const SymMatrix& m, double tol = 1e-9);

// Exact product as a full (non-symmetric) matrix; both inputs exact.
std::vector<std::vector<Rational>> mat_mul_exact(const SymMatrix& a, const SymMatrix& b);

}  // namespace ell

#endif
