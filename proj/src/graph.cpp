#include "elliptope/graph.hpp"

#include <fstream>
#include <sstream>
#include <tuple>

#include "elliptope/error.hpp"

namespace ell {

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return edges_.count({u, v}) != 0;
}

Rational Graph::weight(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = edges_.find({u, v});
  return it == edges_.end() ? Rational(0) : it->second;
}

bool Graph::is_unweighted() const {
  for (const auto& [_, w] : edges_)
    if (w != Rational(1)) return false;
  return true;
}

Rational Graph::total_weight() const {
  Rational s;
  for (const auto& [_, w] : edges_) s += w;
  return s;
}

void Graph::add_edge(int u, int v, const Rational& w) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    fail(ErrorCode::index_out_of_range, "edge endpoint out of range");
  if (u == v) fail(ErrorCode::self_loop, "self-loop rejected");
  if (w.is_zero()) return;  // zero weight = absent edge
  if (u > v) std::swap(u, v);
  auto [it, inserted] = edges_.insert({{u, v}, w});
  if (!inserted)
    fail(ErrorCode::duplicate_edge,
         "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

VertexPartition VertexPartition::canonical() const {
  VertexPartition p = *this;
  if (!p.side.empty() && p.side[0] == 1)
    for (auto& s : p.side) s ^= 1;
  return p;
}

std::vector<int> VertexPartition::side_vertices(unsigned char s) const {
  std::vector<int> out;
  for (int v = 0; v < n(); ++v)
    if (side[v] == s) out.push_back(v);
  return out;
}

Graph from_edge_list(int n, const std::vector<std::tuple<int, int, Rational>>& entries) {
  Graph g(n);
  for (const auto& [u, v, w] : entries) g.add_edge(u, v, w);
  return g;
}

SymMatrix laplacian(const Graph& g) {
  SymMatrix l = SymMatrix::zero_exact(g.n());
  std::vector<Rational> deg(g.n());
  for (const auto& [e, w] : g.edges()) {
    l.set_q(e.first, e.second, -w);
    deg[e.first] += w;
    deg[e.second] += w;
  }
  for (int i = 0; i < g.n(); ++i) l.set_q(i, i, deg[i]);
  return l;
}

Graph complement(const Graph& g) {
  if (!g.is_unweighted()) fail(ErrorCode::not_unweighted, "complement needs an unweighted graph");
  Graph c(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v, Rational(1));
  return c;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<int>> adj(g.n());
  for (const auto& [e, _] : g.edges()) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int u : adj[v])
        if (comp[u] < 0) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  // already ordered by smallest member since seeds scan ascending
  return out;
}

Rational degree(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) fail(ErrorCode::index_out_of_range, "degree: vertex out of range");
  Rational s;
  for (const auto& [e, w] : g.edges())
    if (e.first == v || e.second == v) s += w;
  return s;
}

Rational induced_degree(const Graph& g, const std::vector<int>& subset, int v) {
  if (v < 0 || v >= g.n())
    fail(ErrorCode::index_out_of_range, "induced_degree: vertex out of range");
  std::vector<char> in(g.n(), 0);
  bool v_in = false;
  for (int u : subset) {
    if (u < 0 || u >= g.n())
      fail(ErrorCode::index_out_of_range, "induced_degree: subset vertex out of range");
    in[u] = 1;
    if (u == v) v_in = true;
  }
  if (!v_in) fail(ErrorCode::index_out_of_range, "induced_degree: v not in subset");
  Rational s;
  for (const auto& [e, w] : g.edges()) {
    if (e.first == v && in[e.second]) s += w;
    if (e.second == v && in[e.first]) s += w;
  }
  return s;
}

Graph scale_weights(const Graph& g, const Rational& k) {
  Graph out(g.n());
  for (const auto& [e, w] : g.edges()) out.add_edge(e.first, e.second, w * k);
  return out;
}

bool graphs_equal(const Graph& a, const Graph& b) {
  return a.n() == b.n() && a.edges() == b.edges();
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> pos(g.n(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.n())
      fail(ErrorCode::index_out_of_range, "induced_subgraph: vertex out of range");
    if (pos[v] >= 0) fail(ErrorCode::duplicate_edge, "induced_subgraph: repeated vertex");
    pos[v] = static_cast<int>(i);
  }
  Graph out(static_cast<int>(vertices.size()));
  for (const auto& [e, w] : g.edges())
    if (pos[e.first] >= 0 && pos[e.second] >= 0)
      out.add_edge(pos[e.first], pos[e.second], w);
  return out;
}

Graph read_graph(std::istream& in) {
  std::string line;
  int n = -1;
  Graph g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank
    if (n < 0) {
      if (tok != "n")
        fail(ErrorCode::parse_error, "line " + std::to_string(lineno) + ": expected 'n <count>' header");
      if (!(ls >> n) || n < 0)
        fail(ErrorCode::parse_error, "line " + std::to_string(lineno) + ": bad vertex count");
      g = Graph(n);
      continue;
    }
    int u = 0, v = 0;
    std::string wtok;
    std::istringstream es(line);
    if (!(es >> u >> v >> wtok))
      fail(ErrorCode::parse_error, "line " + std::to_string(lineno) + ": expected 'u v w'");
    g.add_edge(u, v, Rational::parse(wtok));
  }
  if (n < 0) fail(ErrorCode::parse_error, "missing 'n <count>' header");
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io_error, "cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.n() << "\n";
  for (const auto& [e, w] : g.edges())
    out << e.first << ' ' << e.second << ' ' << w.str() << "\n";
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::io_error, "cannot open for writing: " + path);
  write_graph(out, g);
}

}  // namespace ell
