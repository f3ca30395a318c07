#include "elliptope/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "elliptope/error.hpp"

namespace ell {

namespace {

// Dense column-major-agnostic helpers on row-major n*n buffers.
struct Dense {
  int n = 0;
  std::vector<double> a;  // n*n

  explicit Dense(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0.0) {}
  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

bool cholesky(const Dense& m, Dense& l) {
  int n = m.n;
  l = Dense(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = m.at(i, j);
      for (int k = 0; k < j; ++k) s -= l.at(i, k) * l.at(j, k);
      if (i == j) {
        if (!(s > 0.0)) return false;
        l.at(i, i) = std::sqrt(s);
      } else {
        l.at(i, j) = s / l.at(j, j);
      }
    }
  }
  return true;
}

bool is_pd(const Dense& m) {
  Dense l(m.n);
  return cholesky(m, l);
}

// Inverse of a PD matrix via its Cholesky factor.
Dense pd_inverse(const Dense& m) {
  int n = m.n;
  Dense l(n);
  if (!cholesky(m, l)) fail(ErrorCode::internal_error, "pd_inverse on a non-PD matrix");
  Dense inv(n);
  std::vector<double> col(n);
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i) {
      double s = (i == c) ? 1.0 : 0.0;
      for (int k = 0; k < i; ++k) s -= l.at(i, k) * col[k];
      col[i] = s / l.at(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
      double s = col[i];
      for (int k = i + 1; k < n; ++k) s -= l.at(k, i) * col[k];
      col[i] = s / l.at(i, i);
    }
    for (int i = 0; i < n; ++i) inv.at(i, c) = col[i];
  }
  // symmetrize against roundoff
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      double v = 0.5 * (inv.at(i, j) + inv.at(j, i));
      inv.at(i, j) = v;
      inv.at(j, i) = v;
    }
  return inv;
}

// Solve the PD system a x = b in place.
std::vector<double> pd_solve(const Dense& a, std::vector<double> b) {
  Dense l(a.n);
  if (!cholesky(a, l)) fail(ErrorCode::internal_error, "pd_solve on a non-PD matrix");
  int n = a.n;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < i; ++k) b[i] -= l.at(i, k) * b[k];
    b[i] /= l.at(i, i);
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) b[i] -= l.at(k, i) * b[k];
    b[i] /= l.at(i, i);
  }
  return b;
}

double inner(const Dense& a, const Dense& b) {
  double s = 0.0;
  for (size_t k = 0; k < a.a.size(); ++k) s += a.a[k] * b.a[k];
  return s;
}

double step_length(const Dense& m, const Dense& dm) {
  // largest backtracked alpha <= 1 keeping m + alpha dm positive definite
  double alpha = 1.0;
  for (int tries = 0; tries < 60; ++tries) {
    Dense trial = m;
    for (size_t k = 0; k < trial.a.size(); ++k) trial.a[k] += alpha * dm.a[k];
    if (is_pd(trial)) return alpha;
    alpha *= 0.7;
  }
  return 0.0;
}

}  // namespace

const char* exactness_verdict_name(ExactnessVerdict v) {
  switch (v) {
    case ExactnessVerdict::exact_within: return "ExactWithin";
    case ExactnessVerdict::gap_at_least: return "GapAtLeast";
    case ExactnessVerdict::undecided: return "Undecided";
  }
  return "Unknown";
}

PhiResult solve_phi(const Graph& g, double tol) {
  if (tol <= 0) fail(ErrorCode::usage_error, "solve_phi needs tol > 0");
  int n = g.n();
  if (n < 1) fail(ErrorCode::bad_size, "solve_phi needs n >= 1");
  if (n > 256) fail(ErrorCode::too_large, "solve_phi caps at 256 vertices");

  PhiResult res;
  res.tol = tol;
  if (g.edge_count() == 0) {
    res.dual_diag.assign(n, 0.0);
    return res;
  }

  Dense c(n);
  {
    SymMatrix lf = laplacian(g).to_float();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c.at(i, j) = 0.25 * lf.d(i, j);
  }

  Dense x(n);
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) {
    x.at(i, i) = 1.0;
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::fabs(c.at(i, j));
    y[i] = row + 1.0;
  }
  auto z_from_y = [&] {
    Dense z(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) z.at(i, j) = (i == j ? y[i] : 0.0) - c.at(i, j);
    return z;
  };
  Dense z = z_from_y();

  const long long budget = 50LL * n * n;
  double best_gap = 1e300;
  int stall = 0;
  int iter = 0;
  for (; iter < budget; ++iter) {
    double mu = inner(x, z) / n;
    double dual = 0.0;
    for (double v : y) dual += v;
    double ngap = mu * n;
    double scale = std::max(1.0, std::fabs(dual));
    if (ngap <= 1e-11 * scale) break;
    if (ngap < 0.9 * best_gap) {
      best_gap = ngap;
      stall = 0;
    } else if (++stall > 12) {
      break;  // stalled; the contract check below decides if that is fatal
    }

    double sigma = ngap < 1e-6 * scale ? 0.1 : 0.25;
    Dense zi = pd_inverse(z);

    // Schur system: (X o Z^-1) dy = diag(sigma mu Z^-1 - X)
    Dense m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = x.at(i, j) * zi.at(i, j);
    std::vector<double> rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = sigma * mu * zi.at(i, i) - x.at(i, i);
    std::vector<double> dy = pd_solve(m, rhs);

    Dense dz(n);
    for (int i = 0; i < n; ++i) dz.at(i, i) = dy[i];

    // dX = sigma mu Z^-1 - X - sym(X dZ Z^-1); dZ diagonal
    Dense t(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t.at(i, j) = x.at(i, j) * dy[j];
    Dense xdzzi(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += t.at(i, k) * zi.at(k, j);
        xdzzi.at(i, j) = s;
      }
    Dense dx(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dx.at(i, j) = sigma * mu * zi.at(i, j) - x.at(i, j) -
                      0.5 * (xdzzi.at(i, j) + xdzzi.at(j, i));
    for (int i = 0; i < n; ++i) dx.at(i, i) = 0.0;  // keep diag(X) = 1 exact

    double ap = 0.98 * step_length(x, dx);
    double ad = 0.98 * step_length(z, dz);
    if (ap <= 0.0 && ad <= 0.0) break;

    for (size_t k = 0; k < x.a.size(); ++k) x.a[k] += ap * dx.a[k];
    for (int i = 0; i < n; ++i) {
      x.at(i, i) = 1.0;
      y[i] += ad * dy[i];
    }
    z = z_from_y();
  }

  double primal = inner(c, x);
  double dual = 0.0;
  for (double v : y) dual += v;
  res.phi = 0.5 * (primal + dual);
  res.primal_value = primal;
  res.dual_diag = y;
  res.gap = dual - primal;
  res.iterations = iter;
  if (res.gap > tol * std::max(1.0, std::fabs(res.phi)) || res.gap < -tol)
    fail(ErrorCode::no_convergence, "interior-point gap did not reach tolerance");
  return res;
}

ExactnessResult exactness_numeric(const Graph& g, double tol) {
  ExactnessResult res;
  res.tol = tol;
  PhiResult phi = solve_phi(g, tol);
  MaxCutResult mc = brute_force_maxcut(g);
  res.phi = phi.phi;
  res.maxcut = mc.value;
  res.delta = phi.phi - mc.value.to_double();
  if (std::fabs(res.delta) <= 3.0 * tol)
    res.verdict = ExactnessVerdict::exact_within;
  else if (res.delta >= 10.0 * tol)
    res.verdict = ExactnessVerdict::gap_at_least;
  else
    res.verdict = ExactnessVerdict::undecided;
  return res;
}

PhiPropertyReport phi_property_suite(const Graph& g, const Rational& k,
                                     const SplitSpec& spec, double tol, unsigned seed) {
  if (k.sign() <= 0) fail(ErrorCode::usage_error, "scaling factor must be positive");
  PhiPropertyReport rep;
  rep.tol = tol;
  double solver_tol = std::min(tol * 1e-2, 1e-7);

  rep.phi = solve_phi(g, solver_tol).phi;
  rep.phi_scaled = solve_phi(scale_weights(g, k), solver_tol).phi;
  rep.scaling_ok = std::fabs(rep.phi_scaled - k.to_double() * rep.phi) <=
                   tol * std::max(1.0, std::fabs(rep.phi_scaled));

  // one seeded weight increase; weights only grow, so phi may not drop
  if (g.n() >= 2) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, g.n() - 1);
    int u = pick(rng), v = pick(rng);
    while (v == u) v = pick(rng);
    Graph bumped(g.n());
    bool bumped_edge = false;
    for (const auto& [e, w] : g.edges()) {
      if ((e.first == std::min(u, v)) && (e.second == std::max(u, v))) {
        bumped.add_edge(e.first, e.second, w + Rational(1));
        bumped_edge = true;
      } else {
        bumped.add_edge(e.first, e.second, w);
      }
    }
    if (!bumped_edge) bumped.add_edge(u, v, Rational(1));
    rep.phi_monotone = solve_phi(bumped, solver_tol).phi;
    rep.monotonicity_ok = rep.phi <= rep.phi_monotone + tol;
  } else {
    rep.phi_monotone = rep.phi;
    rep.monotonicity_ok = true;
  }

  rep.phi_split = solve_phi(split(g, spec).graph, solver_tol).phi;
  rep.split_ok = std::fabs(rep.phi_split - rep.phi) <= 2.0 * tol;
  return rep;
}

}  // namespace ell
