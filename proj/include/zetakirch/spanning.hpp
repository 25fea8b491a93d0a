#ifndef ZETAKIRCH_SPANNING_HPP
#define ZETAKIRCH_SPANNING_HPP

#include <utility>

#include "zetakirch/graph.hpp"
#include "zetakirch/poly.hpp"

namespace zetakirch {

/// kappa_w, all pairwise resistance distances and the four weighted
/// Kirchhoff indices, plus Kf^z_w(t) = Kf*_w t^2 - 2 Kf+_w t + 4 Kf_w.
struct KirchhoffReport {
  Rational kappa_w;
  Matrix<Rational> resistances;  // symmetric, zero diagonal
  Rational kf, kf_star, kf_plus, kf_z;
  LaurentPoly kf_z_poly;
};

/// det of the weighted Laplacian with one row/column removed (Matrix-Tree).
Rational weighted_complexity(const WeightedGraph& g);

/// Direct sum over all spanning trees of the product of edge weights;
/// the independent oracle for weighted_complexity. Guarded to n <= 10.
Rational brute_force_complexity(const WeightedGraph& g);

Rational resistance_distance(const WeightedGraph& g, int p, int q);

KirchhoffReport kirchhoff_report(const WeightedGraph& g);

/// Exact Kf_w next to the double-precision n * sum(1/mu_i) over the nonzero
/// Laplacian eigenvalues. Requires all weights positive.
std::pair<Rational, double> spectral_kf_check(const WeightedGraph& g);

/// Laplacian minor with the listed rows/columns removed, det over Q.
Rational laplacian_minor_det(const Matrix<Rational>& L, int drop1, int drop2 = -1);

}  // namespace zetakirch

#endif
