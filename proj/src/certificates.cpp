#include "elliptope/certificates.hpp"

#include <algorithm>

#include "elliptope/error.hpp"
#include "elliptope/oracle.hpp"

namespace ell {

namespace {

const Rational kQuarter(1, 4);

std::vector<Rational> sign_vector(const VertexPartition& p) {
  std::vector<Rational> x(p.n());
  for (int i = 0; i < p.n(); ++i) x[i] = Rational(p.side[i] == 0 ? 1 : -1);
  return x;
}

bool product_is_zero(const SymMatrix& a, const SymMatrix& b) {
  auto prod = mat_mul_exact(a, b);
  for (const auto& row : prod)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

bool diag_is_one(const SymMatrix& x) {
  for (int i = 0; i < x.n(); ++i)
    if (x.q(i, i) != Rational(1)) return false;
  return true;
}

bool is_diagonal(const SymMatrix& y) {
  for (int i = 0; i < y.n(); ++i)
    for (int j = 0; j < i; ++j)
      if (!y.q(i, j).is_zero()) return false;
  return true;
}

int shared_nullity(const SymMatrix& x, const SymMatrix& s) {
  auto bx = nullspace_basis(x);
  auto bs = nullspace_basis(s);
  std::vector<std::vector<Rational>> stacked = bx;
  stacked.insert(stacked.end(), bs.begin(), bs.end());
  int dim_sum = rank_exact_rect(stacked);
  return static_cast<int>(bx.size() + bs.size()) - dim_sum;
}

void require_unweighted(const Graph& g, const char* who) {
  if (!g.is_unweighted())
    fail(ErrorCode::not_unweighted, std::string(who) + " needs unweighted inputs");
}

}  // namespace

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::join_balanced: return "JoinBalanced";
    case Provenance::join_unbalanced: return "JoinUnbalanced";
    case Provenance::non_dominating: return "NonDominating";
    case Provenance::split_lift: return "SplitLift";
    case Provenance::lex_lift: return "LexLift";
    case Provenance::manual: return "Manual";
  }
  return "Unknown";
}

Certificate make_certificate(const Graph& g, SymMatrix x, SymMatrix y, Provenance prov) {
  if (x.n() != g.n() || y.n() != g.n())
    fail(ErrorCode::dimension_mismatch, "certificate parts must match the graph order");
  Certificate c;
  SymMatrix l = laplacian(g);
  c.s = y - l.scaled(kQuarter);
  c.objective = l.inner(x) * kQuarter;
  c.x = std::move(x);
  c.y = std::move(y);
  c.provenance = prov;
  c.source_graph = g;
  return c;
}

SymMatrix primal_from_cut(const Graph& g, const VertexPartition& p) {
  if (p.n() != g.n()) fail(ErrorCode::size_mismatch, "partition does not cover the graph");
  return SymMatrix::outer_exact(sign_vector(p));
}

VerificationReport verify_certificate(const Certificate& c) {
  int n = c.source_graph.n();
  if (c.x.n() != n || c.y.n() != n || c.s.n() != n)
    fail(ErrorCode::dimension_mismatch, "certificate dimensions disagree");

  VerificationReport r;
  SymMatrix l = laplacian(c.source_graph);
  r.primal_witness = psd_check_exact(c.x);
  r.feasible_primal = diag_is_one(c.x) && r.primal_witness.psd;

  bool s_consistent = c.s.equals(c.y - l.scaled(kQuarter));
  r.dual_witness = psd_check_exact(c.s);
  r.feasible_dual = is_diagonal(c.y) && s_consistent && r.dual_witness.psd;

  r.objective = l.inner(c.x) * kQuarter;
  r.duality_gap = c.y.trace() - r.objective;
  r.complementary_slackness = product_is_zero(c.x, c.s);
  r.rank_x = rank_exact(c.x);
  r.rank_s = rank_exact(c.s);
  r.shared_nullity = shared_nullity(c.x, c.s);
  return r;
}

bool rank_identity_check(const SymMatrix& x, const SymMatrix& s) {
  if (x.n() != s.n()) fail(ErrorCode::dimension_mismatch, "rank identity size mismatch");
  if (!product_is_zero(x, s))
    fail(ErrorCode::not_complementary, "rank identity needs X S = 0");
  return rank_exact(x) + rank_exact(s) == x.n() - shared_nullity(x, s);
}

Certificate cert_join_balanced(const Graph& ga, const Graph& gb) {
  require_unweighted(ga, "cert_join_balanced");
  require_unweighted(gb, "cert_join_balanced");
  int n = ga.n();
  if (n != gb.n()) fail(ErrorCode::unequal_sizes, "balanced join needs |V_A| = |V_B|");
  if (n < 1) fail(ErrorCode::bad_size, "balanced join needs nonempty sides");

  Graph gp = join(ga, gb);
  VertexPartition p;
  p.side.assign(2 * n, 0);
  for (int i = n; i < 2 * n; ++i) p.side[i] = 1;
  SymMatrix x = primal_from_cut(gp, p);
  std::vector<Rational> yd(2 * n, Rational(n, 2));
  return make_certificate(gp, std::move(x), SymMatrix::diag_exact(yd),
                          Provenance::join_balanced);
}

Uniqueness uniqueness_join_balanced(const Graph& ga, const Graph& gb) {
  require_unweighted(ga, "uniqueness_join_balanced");
  require_unweighted(gb, "uniqueness_join_balanced");
  if (ga.n() != gb.n())
    fail(ErrorCode::unequal_sizes, "balanced join needs |V_A| = |V_B|");
  bool a_conn = connected_components(complement(ga)).size() == 1;
  bool b_conn = connected_components(complement(gb)).size() == 1;
  return (a_conn || b_conn) ? Uniqueness::guaranteed_unique : Uniqueness::inconclusive;
}

Certificate cert_join_unbalanced(const Graph& ga, const Graph& gb) {
  require_unweighted(ga, "cert_join_unbalanced");
  require_unweighted(gb, "cert_join_unbalanced");
  int m1 = ga.n(), m2 = gb.n();
  if (m1 < 1) fail(ErrorCode::bad_size, "unbalanced join needs a nonempty smaller side");
  if (m1 >= m2)
    fail(ErrorCode::sizes_not_strict,
         "unbalanced join needs |V_A| < |V_B| (equality belongs to the balanced case)");
  for (int v = 0; v < m2; ++v)
    if (Rational(2) * degree(gb, v) > Rational(m1))
      fail(ErrorCode::degree_bound_violated,
           "vertex " + std::to_string(v) + " of G_B exceeds the |V_A|/2 degree bound");

  Graph gp = join(ga, gb);
  VertexPartition p;
  p.side.assign(m1 + m2, 0);
  for (int i = m1; i < m1 + m2; ++i) p.side[i] = 1;
  SymMatrix x = primal_from_cut(gp, p);
  std::vector<Rational> yd(m1 + m2);
  for (int i = 0; i < m1; ++i) yd[i] = Rational(m2, 2);
  for (int i = 0; i < m2; ++i) yd[m1 + i] = Rational(m1, 2);
  Certificate c = make_certificate(gp, std::move(x), SymMatrix::diag_exact(yd),
                                   Provenance::join_unbalanced);

  // dual feasibility through the pseudo-Schur route, mirroring the proof
  SchurPsdReport schur = schur_psd_check(c.s, m1, m2);
  if (!schur.witness.psd)
    fail(ErrorCode::internal_error, "unbalanced join slack failed the Schur route");
  return c;
}

HigherRankResult higher_rank_join(const Graph& ga, const Graph& gb,
                                  const VertexPartition& pa, const VertexPartition& pb) {
  require_unweighted(ga, "higher_rank_join");
  require_unweighted(gb, "higher_rank_join");
  int m1 = ga.n(), m2 = gb.n();
  if (pa.n() != m1 || pb.n() != m2)
    fail(ErrorCode::witness_invalid, "bipartition witnesses must cover both sides");
  if ((m1 + m2) % 2 != 0)
    fail(ErrorCode::witness_invalid, "join order must be even to balance the target");

  auto check_cross = [](const Graph& g, const VertexPartition& p, const char* side) {
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v)
        if (p.side[u] != p.side[v] && !g.has_edge(u, v))
          fail(ErrorCode::witness_invalid,
               std::string("missing cross edge in the ") + side + " witness");
  };
  check_cross(ga, pa, "G_A");
  check_cross(gb, pb, "G_B");

  Graph gp = join(ga, gb);
  int n = m1 + m2;
  Rational target = Rational(n) * Rational(n) * kQuarter;

  auto combine = [&](bool flip_a) {
    VertexPartition p;
    p.side.assign(n, 0);
    for (int i = 0; i < m1; ++i) p.side[i] = pa.side[i] ^ (flip_a ? 1 : 0);
    for (int i = 0; i < m2; ++i) p.side[m1 + i] = pb.side[i];
    return p;
  };
  VertexPartition canonical;
  canonical.side.assign(n, 0);
  for (int i = m1; i < n; ++i) canonical.side[i] = 1;

  std::vector<VertexPartition> candidates{combine(false), combine(true), canonical};
  std::vector<VertexPartition> optima;
  for (const auto& p : candidates) {
    if (cut_value(gp, p) != target) continue;
    VertexPartition c = p.canonical();
    bool dup = false;
    for (const auto& o : optima)
      if (o.side == c.side) dup = true;
    if (!dup) optima.push_back(c);
  }
  if (optima.size() < 2)
    fail(ErrorCode::witness_invalid,
         "witnesses do not yield two distinct optimal cuts at the balanced value");

  HigherRankResult res;
  res.cut1 = optima[0];
  res.cut2 = optima[1];
  res.x1 = primal_from_cut(gp, optima[0]);
  res.x2 = primal_from_cut(gp, optima[1]);
  res.x_mid = (res.x1 + res.x2).scaled(Rational(1, 2));
  res.y = SymMatrix::diag_exact(std::vector<Rational>(n, Rational(n, 4)));
  res.objective = target;

  // all three must verify against the same dual
  SymMatrix s = res.y - laplacian(gp).scaled(kQuarter);
  if (!psd_check_exact(s).psd)
    fail(ErrorCode::internal_error, "higher-rank join dual slack not PSD");
  for (const SymMatrix* x : {&res.x1, &res.x2, &res.x_mid})
    if (!product_is_zero(*x, s))
      fail(ErrorCode::internal_error, "higher-rank join candidate lost complementarity");
  return res;
}

bool verify_spanning_biclique_witness(const Graph& g, const VertexPartition& p) {
  require_unweighted(g, "verify_spanning_biclique_witness");
  if (g.n() % 2 != 0) fail(ErrorCode::odd_order, "spanning biclique needs even order");
  if (p.n() != g.n()) fail(ErrorCode::size_mismatch, "partition does not cover the graph");
  auto a = p.side_vertices(0), b = p.side_vertices(1);
  if (a.size() != b.size()) return false;
  for (int u : a)
    for (int v : b)
      if (!g.has_edge(u, v)) return false;
  return true;
}

Certificate cert_nondominating(const std::vector<Rational>& m, NonDominatingData* data) {
  int n = static_cast<int>(m.size());
  if (n < 3) fail(ErrorCode::too_small, "non-dominating construction needs n >= 3");
  Rational total;
  for (const auto& mi : m) {
    if (mi.sign() <= 0) fail(ErrorCode::nonpositive_mass, "masses must be positive");
    total += mi;
  }
  for (int j = 0; j < n; ++j)
    if (Rational(2) * m[j] >= total)
      fail(ErrorCode::dominating,
           "mass " + std::to_string(j) + " dominates the rest");

  NonDominatingData nd;
  nd.total_mass = total;
  nd.u.assign(n, std::vector<Rational>(n, Rational(1)));
  nd.eps.resize(n);
  Rational inv_sum;
  for (int i = 0; i < n; ++i) {
    Rational ratio = (total - m[i]) / m[i];
    nd.u[i][i] = -ratio;
    nd.eps[i] = ratio * ratio - Rational(1);
    inv_sum += Rational(1) / nd.eps[i];
  }
  nd.t = inv_sum / (Rational(1) + inv_sum);
  nd.dprime.resize(n);
  for (int i = 0; i < n; ++i) nd.dprime[i] = (Rational(1) - nd.t) / nd.eps[i];

  SymMatrix x = SymMatrix::zero_exact(n);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c <= r; ++c)
        x.set_q(r, c, x.q(r, c) + nd.dprime[i] * nd.u[i][r] * nd.u[i][c]);

  std::vector<Rational> yd(n);
  for (int i = 0; i < n; ++i) yd[i] = total * m[i] * kQuarter;

  Graph g = complete_weighted(m);
  Certificate cert = make_certificate(g, std::move(x), SymMatrix::diag_exact(yd),
                                      Provenance::non_dominating);

  // construction identities that must hold exactly
  if (!diag_is_one(cert.x))
    fail(ErrorCode::internal_error, "non-dominating primal lost its unit diagonal");
  SymMatrix mmT = SymMatrix::outer_exact(m).scaled(kQuarter);
  if (!cert.s.equals(mmT))
    fail(ErrorCode::internal_error, "non-dominating slack is not mm^T/4");
  if (data) *data = std::move(nd);
  return cert;
}

CounterexampleReport replay_counterexample(int which) {
  if (which != 1 && which != 2)
    fail(ErrorCode::usage_error, "counterexample index must be 1 or 2");

  CounterexampleReport rep;
  rep.which = which;
  std::vector<Rational> masses = which == 1
                                     ? std::vector<Rational>{5, 3, 4, 4}
                                     : std::vector<Rational>{2, 2, 4, 4};
  Graph g = complete_weighted(masses);

  MaxCutResult mc = brute_force_maxcut(g);
  rep.maxcut = mc.value;
  rep.cut_count = mc.count;
  rep.cuts = mc.optimal_cuts;

  NonDominatingData nd;
  Certificate xg_cert = cert_nondominating(masses, &nd);
  rep.dprime = nd.dprime;
  rep.xg_optimal = verify_certificate(xg_cert).optimal();

  SymMatrix z = SymMatrix::identity_exact(4);
  if (which == 1) {
    z.set_q(0, 1, Rational(-1, 3));
    z.set_q(0, 2, Rational(-1, 2));
    z.set_q(0, 3, Rational(-1, 2));
    z.set_q(1, 2, Rational(-1, 6));
    z.set_q(1, 3, Rational(-1, 6));
    z.set_q(2, 3, Rational(-1, 4));
  } else {
    z.set_q(0, 1, Rational(-1, 5));
    z.set_q(0, 2, Rational(-1, 5));
    z.set_q(0, 3, Rational(-1, 5));
    z.set_q(1, 2, Rational(-1, 5));
    z.set_q(1, 3, Rational(-1, 5));
    z.set_q(2, 3, Rational(-4, 5));
  }
  rep.z = z;
  rep.z_feasible = diag_is_one(z) && psd_check_exact(z).psd;
  rep.z_objective = laplacian(g).inner(z) * kQuarter;
  rep.z_rank = rank_exact(z);
  rep.z01 = z.q(0, 1);

  if (which == 1) {
    // Z = (1/48) X* + (47/48) X_G with X* the unique cut's rank-1 solution
    VertexPartition p;
    p.side = {0, 0, 1, 1};
    SymMatrix xstar = primal_from_cut(g, p);
    rep.coefficients = {Rational(1, 48), Rational(47, 48)};
    SymMatrix combo =
        xstar.scaled(rep.coefficients[0]) + xg_cert.x.scaled(rep.coefficients[1]);
    rep.decomposition_ok = combo.equals(z);
    rep.all_ok = rep.z_feasible && rep.z_objective == Rational(64) && rep.z_rank == 3 &&
                 rep.decomposition_ok && rep.maxcut == Rational(64) && rep.cut_count == 1 &&
                 rep.xg_optimal;
  } else {
    VertexPartition p1, p2;
    p1.side = {0, 1, 1, 0};  // ({1,4},{2,3}) one-based
    p2.side = {0, 1, 0, 1};  // ({1,3},{2,4}) one-based
    SymMatrix xstar = primal_from_cut(g, p1);
    SymMatrix ystar = primal_from_cut(g, p2);
    rep.coefficients = {Rational(3, 20), Rational(3, 20), Rational(7, 10)};
    SymMatrix combo = xstar.scaled(rep.coefficients[0]) +
                      ystar.scaled(rep.coefficients[1]) +
                      xg_cert.x.scaled(rep.coefficients[2]);
    rep.decomposition_ok = combo.equals(z);
    // both rank-1 optima share entry (1,2) = -1, so any convex combination
    // pins that coordinate; Z and X_G escape through it
    rep.outside_rank1_hull = xstar.q(0, 1) == Rational(-1) &&
                             ystar.q(0, 1) == Rational(-1) &&
                             rep.z01 != Rational(-1) && xg_cert.x.q(0, 1) != Rational(-1);
    rep.all_ok = rep.z_feasible && rep.z_objective == Rational(36) &&
                 rep.decomposition_ok && rep.maxcut == Rational(36) && rep.cut_count == 2 &&
                 rep.outside_rank1_hull && rep.xg_optimal;
  }
  return rep;
}

SymMatrix lift_split(const SymMatrix& x, const SplitSpec& spec, const Graph& g) {
  if (x.n() != g.n()) fail(ErrorCode::spec_mismatch, "X does not match the graph order");
  spec.validate(g.n());
  if (!diag_is_one(x) || !psd_check_exact(x).psd)
    fail(ErrorCode::infeasible_input, "X must be feasible (unit diagonal, PSD)");

  SplitResult sp = split(g, spec);
  int nn = sp.graph.n();
  SymMatrix out = SymMatrix::zero_exact(nn);
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b <= a; ++b) out.set_q(a, b, x.q(sp.clone_map[a], sp.clone_map[b]));
  return out;
}

Certificate lift_split_certificate(const Certificate& c, const SplitSpec& spec) {
  SymMatrix xt = lift_split(c.x, spec, c.source_graph);
  SplitResult sp = split(c.source_graph, spec);
  std::vector<Rational> yd(sp.graph.n());
  for (int a = 0; a < sp.graph.n(); ++a) {
    int u = sp.clone_map[a];
    yd[a] = c.y.q(u, u) / Rational(spec.multiplicities[u]);
  }
  Certificate out = make_certificate(sp.graph, std::move(xt), SymMatrix::diag_exact(yd),
                                     Provenance::split_lift);
  if (!psd_check_exact(out.s).psd)
    fail(ErrorCode::internal_error, "split-lifted slack lost positive semidefiniteness");
  return out;
}

Certificate lift_lex(const SymMatrix& x, const SymMatrix& ybar, const Graph& g1,
                     const Graph& g2) {
  require_unweighted(g1, "lift_lex");
  require_unweighted(g2, "lift_lex");
  int m = g1.n(), n = g2.n();
  if (x.n() != m || ybar.n() != m)
    fail(ErrorCode::dimension_mismatch, "pair must match |V_1|");
  if (n < 1) fail(ErrorCode::bad_size, "second factor must be nonempty");

  SymMatrix l1 = laplacian(g1);
  SymMatrix sbar = ybar - l1.scaled(kQuarter);
  if (!is_diagonal(ybar))
    fail(ErrorCode::pair_not_optimal, "dual must be diagonal");
  if (!diag_is_one(x) || !psd_check_exact(x).psd)
    fail(ErrorCode::pair_not_optimal, "primal is not feasible");
  if (!psd_check_exact(sbar).psd)
    fail(ErrorCode::pair_not_optimal, "dual slack is not PSD");
  if (ybar.trace() != l1.inner(x) * kQuarter)
    fail(ErrorCode::pair_not_optimal, "pair has a nonzero duality gap");
  if (!product_is_zero(x, sbar))
    fail(ErrorCode::pair_not_optimal, "pair is not complementary");

  Graph product = lex_product(g1, g2);
  SymMatrix xhat = kron(x, SymMatrix::ones_exact(n));
  SymMatrix yhat = kron(ybar, SymMatrix::identity_exact(n).scaled(Rational(n)));
  Certificate cert =
      make_certificate(product, std::move(xhat), std::move(yhat), Provenance::lex_lift);

  // three-term slack split: each term PSD certifies the sum
  std::vector<Rational> d1(m);
  for (int i = 0; i < m; ++i) d1[i] = degree(g1, i);
  SymMatrix first = ybar - SymMatrix::diag_exact(d1).scaled(kQuarter) -
                    SymMatrix::identity_exact(m).scaled(kQuarter);
  SymMatrix y1 = kron(first, laplacian(complete(n)));
  SymMatrix y2 = kron(sbar, SymMatrix::ones_exact(n));
  SymMatrix y3 = kron(SymMatrix::identity_exact(m), laplacian(complement(g2))).scaled(kQuarter);
  if (!cert.s.equals(y1 + y2 + y3))
    fail(ErrorCode::internal_error, "lexicographic slack split identity failed");

  bool three_term = psd_check_exact(y1).psd && psd_check_exact(y2).psd &&
                    psd_check_exact(y3).psd;
  if (!three_term && !psd_check_exact(cert.s).psd)
    fail(ErrorCode::pair_not_optimal, "lifted slack is not PSD");
  return cert;
}

bool delta_identity_check(const Graph& g, const Certificate& c) {
  require_unweighted(g, "delta_identity_check");
  if (c.x.n() != g.n()) fail(ErrorCode::dimension_mismatch, "certificate/graph mismatch");
  if (rank_exact(c.x) != 1 || !diag_is_one(c.x))
    fail(ErrorCode::not_rank_one, "needs a rank-1 certificate with unit diagonal");

  int n = g.n();
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = c.x.q(0, i);  // normalize x_0 = +1
  for (int i = 0; i < n; ++i)
    if (x[i] != Rational(1) && x[i] != Rational(-1))
      fail(ErrorCode::not_rank_one, "rank-1 certificate is not a cut matrix");

  for (int i = 0; i < n; ++i) {
    long crossing = 0, deg = 0;
    for (const auto& [e, _] : g.edges()) {
      int other = -1;
      if (e.first == i) other = e.second;
      if (e.second == i) other = e.first;
      if (other < 0) continue;
      ++deg;
      if (x[i] != x[other]) ++crossing;
    }
    if (c.y.q(i, i) != Rational(crossing, 2)) return false;
    if (Rational(2 * crossing) < Rational(deg)) return false;
  }
  return true;
}

std::optional<Certificate> certificate_from_cut(const Graph& g, const VertexPartition& p) {
  if (p.n() != g.n()) fail(ErrorCode::size_mismatch, "partition does not cover the graph");
  auto x = sign_vector(p);
  auto lx = laplacian(g).matvec(x);
  std::vector<Rational> yd(g.n());
  for (int i = 0; i < g.n(); ++i) yd[i] = x[i] * lx[i] * kQuarter;
  Certificate c = make_certificate(g, SymMatrix::outer_exact(x),
                                   SymMatrix::diag_exact(yd), Provenance::manual);
  if (!psd_check_exact(c.s).psd) return std::nullopt;
  return c;
}

}  // namespace ell
