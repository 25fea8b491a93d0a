#include "zetakirch/zeta.hpp"

#include "zetakirch/errors.hpp"

namespace zetakirch {

namespace {

// Map v^a t^b -> (1-u)^a t^(a+b); inverse of the v = (1-u) t substitution.
BiPoly expand_aux_var(const BiPoly& p) {
  BiPoly out;
  for (const auto& [k, c] : p.terms()) {
    const int a = k.first, b = k.second;
    for (int j = 0; j <= a; ++j) {
      Rational coef = c * binomial(a, j);
      if (j & 1) coef = -coef;
      out.add_term(j, a + b, coef);
    }
  }
  return out;
}

}  // namespace

EdgeSystem edge_system(const WeightedGraph& g) {
  const int arcs = g.arc_count();
  EdgeSystem sys{Matrix<Rational>(arcs, arcs, Rational(0)),
                 Matrix<Rational>(arcs, arcs, Rational(0))};
  for (int e = 0; e < arcs; ++e) {
    for (int f = 0; f < arcs; ++f) {
      if (g.arc_target(e) == g.arc_origin(f)) sys.B_w.at(e, f) = g.arc_weight(f);
    }
    sys.J0.at(e, g.arc_inverse(e)) = Rational(1);
  }
  return sys;
}

BiPoly zeta_edge_reciprocal(const WeightedGraph& g) {
  const EdgeSystem sys = edge_system(g);
  const int arcs = g.arc_count();
  // Entries delta - t B + v J0 with v = (1-u) t; keeps per-entry degrees at 1.
  Matrix<BiPoly> m(arcs, arcs);
  for (int e = 0; e < arcs; ++e) {
    for (int f = 0; f < arcs; ++f) {
      BiPoly cell;
      if (e == f) cell.add_term(0, 0, Rational(1));
      if (!sys.B_w.at(e, f).is_zero()) cell.add_term(0, 1, -sys.B_w.at(e, f));
      if (!sys.J0.at(e, f).is_zero()) cell.add_term(1, 0, sys.J0.at(e, f));
      m.at(e, f) = cell;
    }
  }
  return expand_aux_var(polymatrix_det(m));
}

BiPoly char_like_det(const Matrix<Rational>& X, const std::vector<Rational>& diag) {
  const int n = X.rows();
  Matrix<BiPoly> m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      BiPoly cell;
      if (i == j) {
        cell.add_term(0, 0, Rational(1));
        cell.add_term(2, 0, Rational(-1));      // -v^2
        cell.add_term(1, 1, diag[i]);           // v t d_i
      }
      if (!X.at(i, j).is_zero()) cell.add_term(0, 1, -X.at(i, j));
      m.at(i, j) = cell;
    }
  }
  return expand_aux_var(polymatrix_det(m));
}

BiPoly f_w_poly(const MatrixBundle& b) {
  const int n = b.W.rows();
  std::vector<Rational> d(n);
  for (int i = 0; i < n; ++i) d[i] = b.D_w.at(i, i);
  return char_like_det(b.W, d);
}

BiPoly f_w_poly(const WeightedGraph& g) { return f_w_poly(matrices(g)); }

BiPoly prefactor_power(int k) {
  if (k < 0) throw InternalError("prefactor_power wants k >= 0");
  BiPoly base(1);
  base.add_term(0, 2, Rational(-1));
  base.add_term(1, 2, Rational(2));
  base.add_term(2, 2, Rational(-1));  // 1 - (1-u)^2 t^2
  return base.pow(static_cast<unsigned>(k));
}

Theorem10Result theorem10_check(const WeightedGraph& g, const Rational& rhs_offset) {
  const int m = g.edge_count(), n = g.vertex_count();
  const BiPoly edge = zeta_edge_reciprocal(g);
  const BiPoly vertex = f_w_poly(g);
  BiPoly lhs = edge * prefactor_power(std::max(0, n - m));
  BiPoly rhs = vertex * prefactor_power(std::max(0, m - n));
  rhs += BiPoly(rhs_offset);
  Theorem10Result res{lhs == rhs, lhs, rhs, lhs - rhs};
  return res;
}

ZetaReciprocal vertex_reciprocal(const WeightedGraph& g) {
  return {g.edge_count() - g.vertex_count(), f_w_poly(g)};
}

ZetaReciprocal ihara_reciprocal(const WeightedGraph& g) {
  const BiPoly core = f_w_poly(unweighted_view(g)).eval_u(Rational(0));
  return {g.edge_count() - g.vertex_count(), core};
}

BiPoly bartholdi_core(const WeightedGraph& g) { return f_w_poly(unweighted_view(g)); }

}  // namespace zetakirch
