#ifndef ZETAKIRCH_GRAPH_HPP
#define ZETAKIRCH_GRAPH_HPP

#include <string>
#include <string_view>
#include <vector>

#include "zetakirch/matrix.hpp"
#include "zetakirch/rational.hpp"

namespace zetakirch {

struct Edge {
  int u, v;    // 0-based endpoints, u < v
  Rational w;  // nonzero, attached to the unordered edge
};

/// Simple connected graph with symmetric nonzero rational edge weights.
/// Oriented arcs: arc 2k runs along edge k from the smaller endpoint,
/// arc 2k+1 is its inverse, so the involution pairs 2k with 2k+1.
class WeightedGraph {
 public:
  WeightedGraph(int n, std::vector<Edge> edges);

  static WeightedGraph parse(std::string_view text);  // .wgr format
  std::string to_wgr() const;

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int arc_count() const { return 2 * edge_count(); }
  const std::vector<Edge>& edges() const { return edges_; }

  int arc_origin(int a) const { return (a & 1) ? edges_[a >> 1].v : edges_[a >> 1].u; }
  int arc_target(int a) const { return (a & 1) ? edges_[a >> 1].u : edges_[a >> 1].v; }
  int arc_inverse(int a) const { return a ^ 1; }
  int arc_edge(int a) const { return a >> 1; }
  const Rational& arc_weight(int a) const { return edges_[a >> 1].w; }

  Rational total_weight() const;                  // w(G), sum over edges
  std::vector<Rational> weighted_degrees() const; // d^w_i
  std::vector<int> degrees() const;
  bool is_unit_weight() const;

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// W, D_w and L = D_w - W for a graph (or A, D, D - A for the unweighted view).
struct MatrixBundle {
  Matrix<Rational> W;
  Matrix<Rational> D_w;
  Matrix<Rational> L;
  Rational total_weight;
};

MatrixBundle matrices(const WeightedGraph& g);
MatrixBundle unweighted_view(const WeightedGraph& g);

}  // namespace zetakirch

#endif
