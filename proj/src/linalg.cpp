#include "elliptope/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "elliptope/error.hpp"

namespace ell {

namespace {

using QVec = std::vector<Rational>;
using QMat = std::vector<std::vector<Rational>>;

QMat full_from_sym(const SymMatrix& m) {
  QMat a(m.n(), QVec(m.n()));
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) a[i][j] = m.q(i, j);
  return a;
}

SymMatrix sym_from_full(const QMat& a) {
  int n = static_cast<int>(a.size());
  SymMatrix m = SymMatrix::zero_exact(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      if (a[i][j] != a[j][i])
        fail(ErrorCode::internal_error, "expected a symmetric product");
      m.set_q(i, j, a[i][j]);
    }
  return m;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMat& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  int nr = static_cast<int>(rows.size());
  int nc = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int sel = -1;
    for (int i = r; i < nr; ++i)
      if (!rows[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    Rational inv = Rational(1) / rows[r][c];
    for (int j = c; j < nc; ++j) rows[r][j] *= inv;
    for (int i = 0; i < nr; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rational f = rows[i][c];
      for (int j = c; j < nc; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

QMat mul(const QMat& a, const QMat& b) {
  int n = static_cast<int>(a.size());
  int k = a.empty() ? 0 : static_cast<int>(a[0].size());
  int m = b.empty() ? 0 : static_cast<int>(b[0].size());
  QMat c(n, QVec(m));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (int j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

QMat transpose(const QMat& a) {
  int n = static_cast<int>(a.size());
  int m = a.empty() ? 0 : static_cast<int>(a[0].size());
  QMat t(m, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) t[j][i] = a[i][j];
  return t;
}

// Inverse of a nonsingular square rational matrix (Gauss-Jordan).
QMat invert(QMat a) {
  int n = static_cast<int>(a.size());
  QMat inv(n, QVec(n));
  for (int i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (!a[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) fail(ErrorCode::internal_error, "singular matrix in invert()");
    std::swap(a[c], a[sel]);
    std::swap(inv[c], inv[sel]);
    Rational f = Rational(1) / a[c][c];
    for (int j = 0; j < n; ++j) {
      a[c][j] *= f;
      inv[c][j] *= f;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      Rational g = a[i][c];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= g * a[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

bool PsdWitness::reproduces(const SymMatrix& m) const {
  int n = m.n();
  if (!psd) {
    if (static_cast<int>(violator.size()) != n) return false;
    return m.quad_form(violator) == violation && violation.sign() < 0;
  }
  if (static_cast<int>(perm.size()) != n) return false;
  for (const auto& p : pivots)
    if (p.sign() < 0) return false;
  for (int a = 0; a < n; ++a) {
    if (unit_lower[a][a] != Rational(1)) return false;
    for (int k = a + 1; k < n; ++k)
      if (!unit_lower[a][k].is_zero()) return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b <= a; ++b) {
      Rational lhs = m.q(perm[a], perm[b]);
      Rational rhs;
      for (int k = 0; k < n; ++k) rhs += unit_lower[a][k] * pivots[k] * unit_lower[b][k];
      if (lhs != rhs) return false;
    }
  return true;
}

PsdWitness psd_check_exact(const SymMatrix& m) {
  if (!m.is_exact())
    fail(ErrorCode::not_symmetric_backing, "psd_check_exact requires exact backing");
  int n = m.n();
  QMat a = full_from_sym(m);
  // f tracks the congruence: current a == f * M * f^T
  QMat f(n, QVec(n));
  for (int i = 0; i < n; ++i) f[i][i] = Rational(1);
  std::vector<char> active(n, 1);

  PsdWitness w;
  std::vector<std::pair<int, QVec>> steps;  // (pivot index, multipliers by row)

  auto reduced_witness = [&](const QVec& v) {
    // lift v through the congruence: w = F^T v
    QVec out(n);
    for (int i = 0; i < n; ++i)
      if (!v[i].is_zero())
        for (int j = 0; j < n; ++j) out[j] += f[i][j] * v[i];
    return out;
  };

  for (;;) {
    for (int i = 0; i < n; ++i) {
      if (!active[i] || a[i][i].sign() >= 0) continue;
      QVec v(n);
      v[i] = Rational(1);
      w.psd = false;
      w.violator = reduced_witness(v);
      w.violation = m.quad_form(w.violator);
      if (w.violation.sign() >= 0)
        fail(ErrorCode::internal_error, "psd witness lift lost negativity");
      return w;
    }
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (active[i] && a[i][i].sign() > 0) {
        piv = i;
        break;
      }
    if (piv < 0) break;  // all remaining diagonals are zero

    QVec mult(n);
    for (int j = 0; j < n; ++j)
      if (active[j] && j != piv) mult[j] = a[j][piv] / a[piv][piv];
    steps.push_back({piv, mult});

    for (int j = 0; j < n; ++j) {
      if (!active[j] || j == piv || mult[j].is_zero()) continue;
      for (int l = 0; l < n; ++l) {
        if (!active[l] || l == piv) continue;
        a[j][l] -= mult[j] * a[piv][l];
      }
      for (int l = 0; l < n; ++l) f[j][l] -= mult[j] * f[piv][l];
    }
    for (int j = 0; j < n; ++j) {
      if (j == piv) continue;
      a[j][piv] = Rational(0);
      a[piv][j] = Rational(0);
    }
    active[piv] = 0;
  }

  // zero diagonal everywhere in the residual block: PSD iff the block is zero
  for (int i = 0; i < n; ++i) {
    if (!active[i]) continue;
    for (int j = i + 1; j < n; ++j) {
      if (!active[j] || a[i][j].is_zero()) continue;
      QVec v(n);
      v[i] = Rational(1);
      v[j] = Rational(a[i][j].sign() > 0 ? -1 : 1);
      w.psd = false;
      w.violator = reduced_witness(v);
      w.violation = m.quad_form(w.violator);
      if (w.violation.sign() >= 0)
        fail(ErrorCode::internal_error, "psd witness lift lost negativity");
      return w;
    }
  }

  // assemble the pivoted factorization record
  w.psd = true;
  w.perm.clear();
  for (const auto& [p, _] : steps) w.perm.push_back(p);
  for (int i = 0; i < n; ++i)
    if (active[i]) w.perm.push_back(i);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[w.perm[i]] = i;
  w.unit_lower.assign(n, QVec(n));
  for (int i = 0; i < n; ++i) w.unit_lower[i][i] = Rational(1);
  w.pivots.assign(n, Rational(0));
  for (size_t k = 0; k < steps.size(); ++k) {
    w.pivots[k] = a[steps[k].first][steps[k].first];  // diagonal survives elimination
    for (int j = 0; j < n; ++j)
      if (!steps[k].second[j].is_zero()) w.unit_lower[pos[j]][k] = steps[k].second[j];
  }
  return w;
}

int rank_exact(const SymMatrix& m) {
  if (!m.is_exact())
    fail(ErrorCode::not_symmetric_backing, "rank_exact requires exact backing");
  QMat rows = full_from_sym(m);
  return static_cast<int>(rref(rows).size());
}

std::vector<std::vector<Rational>> nullspace_basis(const SymMatrix& m) {
  if (!m.is_exact())
    fail(ErrorCode::not_symmetric_backing, "nullspace_basis requires exact backing");
  int n = m.n();
  QMat rows = full_from_sym(m);
  std::vector<int> piv = rref(rows);
  std::vector<char> is_piv(n, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<QVec> basis;
  for (int fcol = 0; fcol < n; ++fcol) {
    if (is_piv[fcol]) continue;
    QVec v(n);
    v[fcol] = Rational(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -rows[r][fcol];
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_exact_rect(std::vector<std::vector<Rational>> rows) {
  return static_cast<int>(rref(rows).size());
}

std::optional<std::vector<Rational>> solve_exact(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
  int nr = static_cast<int>(a.size());
  if (nr == 0) return QVec{};
  int nc = static_cast<int>(a[0].size());
  QMat aug(nr, QVec(nc + 1));
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nc; ++j) aug[i][j] = a[i][j];
    aug[i][nc] = b[i];
  }
  std::vector<int> piv = rref(aug);
  QVec x(nc);
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == nc) return std::nullopt;  // pivot in the rhs column: inconsistent
    x[piv[r]] = aug[r][nc];
  }
  return x;
}

SymMatrix pseudo_inverse(const SymMatrix& m) {
  if (!m.is_exact())
    fail(ErrorCode::not_symmetric_backing, "pseudo_inverse requires exact backing");
  int n = m.n();
  QMat full = full_from_sym(m);
  QMat rows = full;
  std::vector<int> piv = rref(rows);
  int r = static_cast<int>(piv.size());
  if (r == 0) return SymMatrix::zero_exact(n);

  QMat c(n, QVec(r)), rr(r, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < r; ++k) c[i][k] = full[i][piv[k]];
  for (int k = 0; k < r; ++k) rr[k] = rows[k];

  // M = C R  =>  M+ = R^T (R R^T)^-1 (C^T C)^-1 C^T
  QMat rt = transpose(rr), ct = transpose(c);
  QMat mid = mul(invert(mul(rr, rt)), invert(mul(ct, c)));
  QMat plus = mul(mul(rt, mid), ct);
  return sym_from_full(plus);
}

SchurPsdReport schur_psd_check(const SymMatrix& m, int na, int nb) {
  if (!m.is_exact())
    fail(ErrorCode::not_symmetric_backing, "schur_psd_check requires exact backing");
  if (na < 0 || nb < 0 || na + nb != m.n())
    fail(ErrorCode::bad_block_sizes, "block sizes must be nonnegative and sum to n");

  SchurPsdReport rep;
  SymMatrix a = SymMatrix::zero_exact(na), b = SymMatrix::zero_exact(nb);
  QMat c(na, QVec(nb));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j <= i; ++j) a.set_q(i, j, m.q(i, j));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j <= i; ++j) b.set_q(i, j, m.q(na + i, na + j));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) c[i][j] = m.q(i, na + j);

  PsdWitness wb = psd_check_exact(b);
  if (!wb.psd) {
    rep.witness.psd = false;
    rep.witness.violator.assign(m.n(), Rational(0));
    for (int j = 0; j < nb; ++j) rep.witness.violator[na + j] = wb.violator[j];
    rep.witness.violation = m.quad_form(rep.witness.violator);
    return rep;
  }

  SymMatrix bplus = pseudo_inverse(b);
  QMat bp = full_from_sym(bplus);
  QMat bf = full_from_sym(b);

  // range(C^T) subset of range(B): every row of C fixed by the projector B B+
  for (int i = 0; i < na; ++i) {
    QVec row(nb), proj(nb);
    for (int j = 0; j < nb; ++j) row[j] = c[i][j];
    QVec t(nb);
    for (int j = 0; j < nb; ++j)
      for (int l = 0; l < nb; ++l) t[j] += bp[j][l] * row[l];
    for (int j = 0; j < nb; ++j)
      for (int l = 0; l < nb; ++l) proj[j] += bf[j][l] * t[l];
    QVec resid(nb);
    bool zero = true;
    for (int j = 0; j < nb; ++j) {
      resid[j] = row[j] - proj[j];
      if (!resid[j].is_zero()) zero = false;
    }
    if (zero) continue;
    // resid lies in N(B) and C*resid != 0: assemble a violating direction
    QVec u(na);
    for (int k = 0; k < na; ++k)
      for (int j = 0; j < nb; ++j) u[k] += c[k][j] * resid[j];
    Rational uau = a.quad_form(u);
    Rational unorm2;
    for (const auto& x : u) unorm2 += x * x;
    Rational t_scale = uau.sign() <= 0 ? Rational(-1) : -unorm2 / uau;
    rep.witness.psd = false;
    rep.witness.violator.assign(m.n(), Rational(0));
    for (int k = 0; k < na; ++k) rep.witness.violator[k] = t_scale * u[k];
    for (int j = 0; j < nb; ++j) rep.witness.violator[na + j] = resid[j];
    rep.witness.violation = m.quad_form(rep.witness.violator);
    if (rep.witness.violation.sign() >= 0)
      fail(ErrorCode::internal_error, "range violation direction was not negative");
    return rep;
  }
  rep.range_ok = true;

  // pseudo-Schur complement A - C B+ C^T
  QMat cb = mul(c, bp);
  QMat cbct = mul(cb, transpose(c));
  SymMatrix schur = SymMatrix::zero_exact(na);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j <= i; ++j) schur.set_q(i, j, a.q(i, j) - cbct[i][j]);

  PsdWitness wa = psd_check_exact(schur);
  if (!wa.psd) {
    QVec x = wa.violator;
    QVec y(nb);  // y = -B+ C^T x
    for (int j = 0; j < nb; ++j)
      for (int i = 0; i < na; ++i)
        for (int l = 0; l < nb; ++l) y[j] -= bp[j][l] * c[i][l] * x[i];
    rep.witness.psd = false;
    rep.witness.violator.assign(m.n(), Rational(0));
    for (int i = 0; i < na; ++i) rep.witness.violator[i] = x[i];
    for (int j = 0; j < nb; ++j) rep.witness.violator[na + j] = y[j];
    rep.witness.violation = m.quad_form(rep.witness.violator);
    if (rep.witness.violation.sign() >= 0)
      fail(ErrorCode::internal_error, "schur violation direction was not negative");
    return rep;
  }

  rep.rank_lower_bound = rank_exact(b) + rank_exact(schur);
  rep.witness = psd_check_exact(m);  // factorization record for the PSD verdict
  if (!rep.witness.psd)
    fail(ErrorCode::internal_error, "schur route and direct PSD check disagree");
  return rep;
}

SymMatrix kron(const SymMatrix& a, const SymMatrix& b) {
  if (a.backing() != b.backing())
    fail(ErrorCode::mixed_backings, "kron requires matching backings");
  int na = a.n(), nb = b.n();
  if (a.is_exact()) {
    SymMatrix k = SymMatrix::zero_exact(na * nb);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j)
        for (int p = 0; p < nb; ++p)
          for (int q = 0; q < nb; ++q) {
            int r = i * nb + p, c = j * nb + q;
            if (c > r) continue;
            k.set_q(r, c, a.q(i, j) * b.q(p, q));
          }
    return k;
  }
  SymMatrix k = SymMatrix::zero_float(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int p = 0; p < nb; ++p)
        for (int q = 0; q < nb; ++q) {
          int r = i * nb + p, c = j * nb + q;
          if (c > r) continue;
          k.set_d(r, c, a.d(i, j) * b.d(p, q));
        }
  return k;
}

EigenResult eigen_sym(const SymMatrix& m, double tol) {
  if (m.is_exact())
    fail(ErrorCode::not_symmetric_backing, "eigen_sym requires float backing");
  if (tol <= 0) fail(ErrorCode::internal_error, "eigen_sym needs tol > 0");
  int n = m.n();
  if (n > 4096) fail(ErrorCode::too_large, "eigen_sym dimension cap is 4096");
  EigenResult res;
  if (n == 0) return res;

  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    v[i][i] = 1.0;
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      a[i][j] = m.d(i, j);
      row += std::fabs(a[i][j]);
    }
    norm = std::max(norm, row);
  }

  auto off_max = [&] {
    double o = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) o = std::max(o, std::fabs(a[i][j]));
    return o;
  };

  const double target = norm == 0.0 ? 0.0 : tol * norm / (4.0 * n);
  const int max_sweeps = 64;
  int sweeps = 0;
  while (off_max() > target) {
    if (++sweeps > max_sweeps)
      fail(ErrorCode::no_convergence, "jacobi sweep budget exhausted");
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = a[p][q];
        if (std::fabs(apq) <= target / 4.0) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a[i][i] < a[j][j]; });
  res.values.resize(n);
  res.vectors.assign(n, std::vector<double>(n));
  for (int k = 0; k < n; ++k) {
    res.values[k] = a[order[k]][order[k]];
    for (int i = 0; i < n; ++i) res.vectors[k][i] = v[i][order[k]];
  }

  // enforce the stated residual contract
  for (int k = 0; k < n; ++k) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = -res.values[k] * res.vectors[k][i];
      for (int j = 0; j < n; ++j) r += m.d(i, j) * res.vectors[k][j];
      worst = std::max(worst, std::fabs(r));
    }
    if (worst > tol * std::max(norm, 1e-300))
      fail(ErrorCode::no_convergence, "eigenpair residual exceeds tolerance");
  }
  return res;
}

std::vector<std::vector<Rational>> mat_mul_exact(const SymMatrix& a, const SymMatrix& b) {
  if (!a.is_exact() || !b.is_exact())
    fail(ErrorCode::not_symmetric_backing, "mat_mul_exact requires exact backing");
  if (a.n() != b.n()) fail(ErrorCode::dimension_mismatch, "mat_mul_exact size mismatch");
  return mul(full_from_sym(a), full_from_sym(b));
}

}  // namespace ell
