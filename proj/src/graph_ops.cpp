#include "elliptope/graph_ops.hpp"

#include <numeric>

#include "elliptope/error.hpp"
#include "elliptope/linalg.hpp"

namespace ell {

int SplitSpec::total() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
}

void SplitSpec::validate(int n) const {
  if (static_cast<int>(multiplicities.size()) != n)
    fail(ErrorCode::spec_mismatch, "split spec length does not match vertex count");
  for (int p : multiplicities)
    if (p < 1) fail(ErrorCode::zero_multiplicity, "split multiplicities must be >= 1");
}

Graph join(const Graph& g1, const Graph& g2, const Rational& cross_weight) {
  int n1 = g1.n(), n2 = g2.n();
  Graph g(n1 + n2);
  for (const auto& [e, w] : g1.edges()) g.add_edge(e.first, e.second, w);
  for (const auto& [e, w] : g2.edges()) g.add_edge(n1 + e.first, n1 + e.second, w);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) g.add_edge(u, n1 + v, cross_weight);
  return g;
}

SplitResult split(const Graph& g, const SplitSpec& spec) {
  spec.validate(g.n());
  std::vector<int> offset(g.n() + 1, 0);
  for (int i = 0; i < g.n(); ++i) offset[i + 1] = offset[i] + spec.multiplicities[i];
  SplitResult res;
  res.graph = Graph(offset[g.n()]);
  res.clone_map.resize(offset[g.n()]);
  for (int i = 0; i < g.n(); ++i)
    for (int k = 0; k < spec.multiplicities[i]; ++k) res.clone_map[offset[i] + k] = i;
  for (const auto& [e, w] : g.edges()) {
    auto [u, v] = e;
    Rational wv = w / Rational(static_cast<long>(spec.multiplicities[u]) *
                               spec.multiplicities[v]);
    for (int a = 0; a < spec.multiplicities[u]; ++a)
      for (int b = 0; b < spec.multiplicities[v]; ++b)
        res.graph.add_edge(offset[u] + a, offset[v] + b, wv);
  }
  return res;
}

Graph lex_product(const Graph& g1, const Graph& g2) {
  int m = g1.n(), n = g2.n();
  Graph g(m * n);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v)
      for (int u2 = u; u2 < m; ++u2)
        for (int v2 = (u2 == u ? v + 1 : 0); v2 < n; ++v2) {
          bool adj = g1.has_edge(u, u2) || (u == u2 && g2.has_edge(v, v2));
          if (adj) g.add_edge(u * n + v, u2 * n + v2, Rational(1));
        }
  return g;
}

bool lex_laplacian_identity(const Graph& g1, const Graph& g2) {
  if (!g1.is_unweighted() || !g2.is_unweighted())
    fail(ErrorCode::not_unweighted, "lex_laplacian_identity needs unweighted inputs");
  int m = g1.n(), n = g2.n();
  SymMatrix l1 = laplacian(g1), l2 = laplacian(g2);
  std::vector<Rational> d1(m), d2(n);
  for (int i = 0; i < m; ++i) d1[i] = degree(g1, i);
  for (int i = 0; i < n; ++i) d2[i] = degree(g2, i);
  SymMatrix dm1 = SymMatrix::diag_exact(d1), dm2 = SymMatrix::diag_exact(d2);
  SymMatrix im = SymMatrix::identity_exact(m);
  SymMatrix in_scaled = SymMatrix::identity_exact(n).scaled(Rational(n));

  SymMatrix rhs = kron(im, dm2) + kron(dm1, in_scaled) + kron(im, l2 - dm2) +
                  kron(l1 - dm1, SymMatrix::ones_exact(n));
  return laplacian(lex_product(g1, g2)).equals(rhs);
}

Graph complete_kpartite(const std::vector<int>& a) {
  if (a.empty()) fail(ErrorCode::empty_part_list, "complete_kpartite needs parts");
  for (int s : a)
    if (s < 1) fail(ErrorCode::bad_size, "part sizes must be positive");
  int n = std::accumulate(a.begin(), a.end(), 0);
  std::vector<int> part(n);
  int at = 0;
  for (size_t p = 0; p < a.size(); ++p)
    for (int k = 0; k < a[p]; ++k) part[at++] = static_cast<int>(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[u] != part[v]) g.add_edge(u, v, Rational(1));
  return g;
}

Graph complete_weighted(const std::vector<Rational>& m) {
  for (const auto& mi : m)
    if (mi.sign() <= 0) fail(ErrorCode::nonpositive_mass, "masses must be positive");
  int n = static_cast<int>(m.size());
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v, m[u] * m[v]);
  return g;
}

Graph cycle(int n) {
  if (n < 3) fail(ErrorCode::bad_size, "cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, Rational(1));
  return g;
}

Graph path(int n) {
  if (n < 1) fail(ErrorCode::bad_size, "path needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, Rational(1));
  return g;
}

Graph complete(int n) {
  if (n < 1) fail(ErrorCode::bad_size, "complete needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v, Rational(1));
  return g;
}

Graph edgeless(int n) {
  if (n < 0) fail(ErrorCode::bad_size, "edgeless needs n >= 0");
  return Graph(n);
}

}  // namespace ell
