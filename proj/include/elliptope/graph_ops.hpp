#ifndef ELLIPTOPE_GRAPH_OPS_HPP
#define ELLIPTOPE_GRAPH_OPS_HPP

#include <vector>

#include "elliptope/graph.hpp"

namespace ell {

// Per-vertex clone multiplicities for the graph split operation.
struct SplitSpec {
  std::vector<int> multiplicities;  // all >= 1

  int total() const;
  void validate(int n) const;  // throws ZeroMultiplicity / SpecMismatch
};

struct SplitResult {
  Graph graph;
  std::vector<int> clone_map;  // new vertex -> original vertex
};

// Vertex order: G1's vertices first, then G2's. Cross edges get weight 1
// unless cross_weight says otherwise.
Graph join(const Graph& g1, const Graph& g2, const Rational& cross_weight = Rational(1));

// Clones of vertex i are contiguous, in input order; edge uv of weight w
// becomes all clone pairs with weight w/(p_u p_v).
SplitResult split(const Graph& g, const SplitSpec& spec);

// Vertex (u,v) -> u*|V2| + v; edge iff uu' in E1, or u == u' and vv' in E2.
Graph lex_product(const Graph& g1, const Graph& g2);

// Checks the Kronecker-form Laplacian identity of the lexicographic product.
bool lex_laplacian_identity(const Graph& g1, const Graph& g2);

// Parts laid out in index order, sizes a[i]; edges across parts only.
Graph complete_kpartite(const std::vector<int>& a);

// Complete graph with w_ij = m_i * m_j, all m_i > 0.
Graph complete_weighted(const std::vector<Rational>& m);

Graph cycle(int n);     // n >= 3
Graph path(int n);      // n >= 1
Graph complete(int n);  // n >= 1
Graph edgeless(int n);  // n >= 0

}  // namespace ell

#endif
