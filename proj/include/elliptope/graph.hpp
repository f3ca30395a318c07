#ifndef ELLIPTOPE_GRAPH_HPP
#define ELLIPTOPE_GRAPH_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "elliptope/matrix.hpp"
#include "elliptope/rational.hpp"

namespace ell {

// Weighted simple graph on vertices 0..n-1. An absent pair is an absent
// edge; stored weights are always nonzero. Immutable after construction.
class Graph {
 public:
  Graph() : n_(0) {}
  explicit Graph(int n) : n_(n) {}

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::map<std::pair<int, int>, Rational>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  // Zero for absent pairs.
  Rational weight(int u, int v) const;

  bool is_unweighted() const;  // all weights exactly 1
  Rational total_weight() const;

  // Sole mutation point, used by constructors in this module and graph_ops.
  void add_edge(int u, int v, const Rational& w);

 private:
  int n_;
  std::map<std::pair<int, int>, Rational> edges_;  // key (min,max)
};

// Two-sided vertex labels; side[v] is 0 (side A) or 1 (side B).
struct VertexPartition {
  std::vector<unsigned char> side;

  int n() const { return static_cast<int>(side.size()); }
  // Flips so vertex 0 lands on side A.
  VertexPartition canonical() const;
  std::vector<int> side_vertices(unsigned char s) const;
};

Graph from_edge_list(int n, const std::vector<std::tuple<int, int, Rational>>& entries);

SymMatrix laplacian(const Graph& g);
Graph complement(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

Rational degree(const Graph& g, int v);
Rational induced_degree(const Graph& g, const std::vector<int>& subset, int v);

Graph scale_weights(const Graph& g, const Rational& k);

// Subgraph on the listed vertices, re-indexed in list order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

bool graphs_equal(const Graph& a, const Graph& b);

// Text edge-list format: header "n <count>", one "u v p/q" line per edge,
// '#' starts a comment. Round-trips exactly.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace ell

#endif
