#ifndef ZETAKIRCH_ZETA_HPP
#define ZETAKIRCH_ZETA_HPP

#include "zetakirch/graph.hpp"
#include "zetakirch/matrix.hpp"
#include "zetakirch/poly.hpp"

namespace zetakirch {

/// The 2m x 2m arc matrices: B_w[e][f] = w(f) iff t(e) = o(f), and the
/// arc-inversion permutation J_0 (symmetric, zero diagonal, J_0^2 = I).
struct EdgeSystem {
  Matrix<Rational> B_w;
  Matrix<Rational> J0;
};

/// (1 - (1-u)^2 t^2)^prefactor_exponent * core, kept factored so tree graphs
/// (negative exponent) stay inside the polynomial ring.
struct ZetaReciprocal {
  int prefactor_exponent;  // m - n
  BiPoly core;             // f_w(u, t)
};

struct Theorem10Result {
  bool ok;
  BiPoly lhs, rhs;  // cross-multiplied sides
  BiPoly diff;
};

EdgeSystem edge_system(const WeightedGraph& g);

/// det(I_2m - t(B_w - (1-u) J_0)), the reciprocal zeta determinant in edge form.
BiPoly zeta_edge_reciprocal(const WeightedGraph& g);

/// f_w(u,t) = det(I_n - t W + (1-u) t^2 (D_w - (1-u) I_n)).
BiPoly f_w_poly(const WeightedGraph& g);

/// f_w for an explicit bundle (used for the unweighted specializations).
BiPoly f_w_poly(const MatrixBundle& b);

/// (1 - (1-u)^2 t^2)^k for k >= 0.
BiPoly prefactor_power(int k);

/// Edge form == prefactor * vertex form, cross-multiplied when m < n.
/// rhs_offset shifts the vertex side; nonzero values drive negative controls.
Theorem10Result theorem10_check(const WeightedGraph& g,
                                const Rational& rhs_offset = Rational(0));

ZetaReciprocal vertex_reciprocal(const WeightedGraph& g);

/// Ihara reciprocal: u = 0, w = 1 specialization (Bass determinant core).
ZetaReciprocal ihara_reciprocal(const WeightedGraph& g);

/// The Bartholdi determinant core: w = 1 with u kept symbolic.
BiPoly bartholdi_core(const WeightedGraph& g);

/// det((1 - v^2) I - t X + v t diag(d)) with v = (1-u) t expanded back to
/// (u, t); equals det(I - t X + (1-u) t^2 (diag(d) - (1-u) I)).
BiPoly char_like_det(const Matrix<Rational>& X, const std::vector<Rational>& diag);

}  // namespace zetakirch

#endif
