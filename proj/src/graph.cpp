#include "zetakirch/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zetakirch/errors.hpp"

namespace zetakirch {

namespace {

bool connected(int n, const std::vector<Edge>& edges) {
  if (n <= 0) return false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 2) throw ValidationError("graph needs at least 2 vertices");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
      throw ValidationError("edge endpoint out of range");
    if (e.u == e.v) throw ValidationError("loops are not allowed");
    if (e.u > e.v) throw ValidationError("edge endpoints must be ordered");
    if (e.w.is_zero()) throw ValidationError("zero edge weight");
    if (!seen.insert({e.u, e.v}).second) throw ValidationError("duplicate edge");
  }
  if (!connected(n_, edges_)) throw ValidationError("graph is not connected");
}

WeightedGraph WeightedGraph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<Edge> edges;
  int read_edges = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw ParseError("expected header 'n m'", lineno);
      std::string rest;
      if (ls >> rest) throw ParseError("trailing tokens after header", lineno);
      continue;
    }
    if (read_edges >= m) throw ParseError("more edge lines than declared", lineno);
    int i = 0, j = 0;
    std::string wtok;
    if (!(ls >> i >> j >> wtok)) throw ParseError("expected edge line 'i j w'", lineno);
    std::string rest;
    if (ls >> rest) throw ParseError("trailing tokens after edge", lineno);
    if (i < 1 || j < 1 || i > n || j > n)
      throw ValidationError("vertex index out of range", lineno);
    if (i == j) throw ValidationError("loop edge", lineno);
    if (i > j) throw ParseError("edge endpoints must satisfy i < j", lineno);
    Rational w;
    try {
      w = Rational::parse(wtok);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
    if (w.is_zero()) throw ValidationError("zero edge weight", lineno);
    edges.push_back({i - 1, j - 1, w});
    ++read_edges;
  }
  if (n < 0) throw ParseError("empty graph file");
  if (read_edges != m)
    throw ParseError("declared " + std::to_string(m) + " edges, found " +
                     std::to_string(read_edges));
  try {
    return WeightedGraph(n, std::move(edges));
  } catch (const ValidationError& e) {
    throw ValidationError(e.what());
  }
}

std::string WeightedGraph::to_wgr() const {
  std::ostringstream os;
  os << n_ << " " << edges_.size() << "\n";
  for (const auto& e : edges_)
    os << e.u + 1 << " " << e.v + 1 << " " << e.w.str() << "\n";
  return os.str();
}

Rational WeightedGraph::total_weight() const {
  Rational acc(0);
  for (const auto& e : edges_) acc += e.w;
  return acc;
}

std::vector<Rational> WeightedGraph::weighted_degrees() const {
  std::vector<Rational> d(n_, Rational(0));
  for (const auto& e : edges_) {
    d[e.u] += e.w;
    d[e.v] += e.w;
  }
  return d;
}

std::vector<int> WeightedGraph::degrees() const {
  std::vector<int> d(n_, 0);
  for (const auto& e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

bool WeightedGraph::is_unit_weight() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.w.is_one(); });
}

MatrixBundle matrices(const WeightedGraph& g) {
  const int n = g.vertex_count();
  MatrixBundle b{Matrix<Rational>(n, n, Rational(0)), Matrix<Rational>(n, n, Rational(0)),
                 Matrix<Rational>(n, n, Rational(0)), g.total_weight()};
  for (const auto& e : g.edges()) {
    b.W.at(e.u, e.v) = e.w;
    b.W.at(e.v, e.u) = e.w;
  }
  const auto d = g.weighted_degrees();
  for (int i = 0; i < n; ++i) b.D_w.at(i, i) = d[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.L.at(i, j) = b.D_w.at(i, j) - b.W.at(i, j);
  return b;
}

MatrixBundle unweighted_view(const WeightedGraph& g) {
  const int n = g.vertex_count();
  MatrixBundle b{Matrix<Rational>(n, n, Rational(0)), Matrix<Rational>(n, n, Rational(0)),
                 Matrix<Rational>(n, n, Rational(0)), Rational(g.edge_count())};
  for (const auto& e : g.edges()) {
    b.W.at(e.u, e.v) = Rational(1);
    b.W.at(e.v, e.u) = Rational(1);
  }
  const auto d = g.degrees();
  for (int i = 0; i < n; ++i) b.D_w.at(i, i) = Rational(d[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.L.at(i, j) = b.D_w.at(i, j) - b.W.at(i, j);
  return b;
}

}  // namespace zetakirch
