#include "zetakirch/matrix.hpp"

namespace zetakirch {

namespace {

// Small integer evaluation nodes 0, 1, -1, 2, -2, ...
Rational interp_node(int j) {
  const int v = (j % 2 == 1) ? (j + 1) / 2 : -(j / 2);
  return Rational(v);
}

// Sum over rows of the max u-degree in the row bounds deg_u of the determinant.
int det_u_degree_bound(const Matrix<BiPoly>& m) {
  int bound = 0;
  for (int i = 0; i < m.rows(); ++i) {
    int row = 0;
    bool nonzero_row = false;
    for (int j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero()) {
        nonzero_row = true;
        row = std::max(row, m.at(i, j).max_deg_u());
      }
    }
    if (!nonzero_row) return 0;  // zero row: determinant is zero anyway
    bound += row;
  }
  return bound;
}

constexpr int kDirectSideLimit = 8;

}  // namespace

BiPoly polymatrix_det_interpolated(const Matrix<BiPoly>& m) {
  const int n = m.rows();
  if (n != m.cols() || n < 1) throw InternalError("det of non-square or empty matrix");
  const int bound = det_u_degree_bound(m);
  const int points = bound + 1;

  std::vector<Rational> nodes(points);
  for (int j = 0; j < points; ++j) nodes[j] = interp_node(j);

  std::vector<BiPoly> values(points);
  for (int j = 0; j < points; ++j) {
    Matrix<BiPoly> mj(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) mj.at(r, c) = m.at(r, c).eval_u(nodes[j]);
    values[j] = det_bareiss(mj);
  }
  if (points == 1) return values[0];

  // Lagrange in u: master = prod (u - node_j); each basis numerator is the
  // synthetic quotient master / (u - node_j).
  std::vector<Rational> master{Rational(1)};
  for (int j = 0; j < points; ++j) {
    std::vector<Rational> next(master.size() + 1);
    for (size_t i = 0; i < master.size(); ++i) {
      next[i + 1] += master[i];
      next[i] -= master[i] * nodes[j];
    }
    master = std::move(next);
  }

  BiPoly result;
  for (int j = 0; j < points; ++j) {
    // Deflate master by the root nodes[j].
    std::vector<Rational> basis(master.size() - 1);
    Rational carry(0);
    for (size_t i = master.size(); i-- > 1;) {
      carry = master[i] + carry * nodes[j];
      basis[i - 1] = carry;
    }
    Rational denom(0);
    {
      // basis evaluated at the node equals prod_{i != j} (node_j - node_i).
      Rational pw(1);
      for (size_t i = 0; i < basis.size(); ++i) {
        denom += basis[i] * pw;
        pw *= nodes[j];
      }
    }
    const Rational scale = Rational(1) / denom;
    for (size_t a = 0; a < basis.size(); ++a) {
      if (basis[a].is_zero()) continue;
      const Rational c = basis[a] * scale;
      for (const auto& [k, v] : values[j].terms())
        result.add_term(static_cast<int>(a), k.second, v * c);
    }
  }
  return result;
}

BiPoly polymatrix_det(const Matrix<BiPoly>& m) {
  const int n = m.rows();
  if (n != m.cols() || n < 1) throw InternalError("det of non-square or empty matrix");
  if (n <= 3) return det_cofactor(m);
  if (n <= kDirectSideLimit || det_u_degree_bound(m) == 0) return det_bareiss(m);
  return polymatrix_det_interpolated(m);
}

Matrix<BiPoly> to_poly_matrix(const Matrix<Rational>& m) {
  Matrix<BiPoly> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = BiPoly(m.at(i, j));
  return out;
}

}  // namespace zetakirch
