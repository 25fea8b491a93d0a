#include "zetakirch/spanning.hpp"

#include <Eigen/Dense>
#include <numeric>

#include "zetakirch/errors.hpp"

namespace zetakirch {

Rational laplacian_minor_det(const Matrix<Rational>& L, int drop1, int drop2) {
  const int n = L.rows();
  std::vector<int> keep;
  keep.reserve(n);
  for (int i = 0; i < n; ++i)
    if (i != drop1 && i != drop2) keep.push_back(i);
  if (keep.empty()) return Rational(1);  // empty minor, det of 0x0
  Matrix<Rational> sub(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j)
      sub.at(static_cast<int>(i), static_cast<int>(j)) = L.at(keep[i], keep[j]);
  return rational_det(sub);
}

Rational weighted_complexity(const WeightedGraph& g) {
  const MatrixBundle b = matrices(g);
  return laplacian_minor_det(b.L, 0);
}

Rational brute_force_complexity(const WeightedGraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n > 10) throw SizeError("brute-force enumeration limited to n <= 10");
  if (n - 1 > m) return Rational(0);
  const auto& edges = g.edges();
  std::vector<int> pick(n - 1);
  std::iota(pick.begin(), pick.end(), 0);
  Rational total(0);
  std::vector<int> parent(n);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  while (true) {
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    Rational w(1);
    for (int idx : pick) {
      const int a = find(edges[idx].u), b = find(edges[idx].v);
      if (a == b) {
        acyclic = false;
        break;
      }
      parent[a] = b;
      w *= edges[idx].w;
    }
    if (acyclic) total += w;  // n-1 acyclic edges on n vertices span
    // next (n-1)-subset in lexicographic order
    int i = n - 2;
    while (i >= 0 && pick[i] == m - (n - 1) + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n - 1; ++j) pick[j] = pick[j - 1] + 1;
  }
  return total;
}

Rational resistance_distance(const WeightedGraph& g, int p, int q) {
  if (p == q) return Rational(0);
  const MatrixBundle b = matrices(g);
  const Rational kappa = laplacian_minor_det(b.L, 0);
  if (kappa.is_zero()) throw SingularError("kappa_w = 0: resistance undefined");
  return laplacian_minor_det(b.L, p, q) / kappa;
}

KirchhoffReport kirchhoff_report(const WeightedGraph& g) {
  const int n = g.vertex_count();
  const MatrixBundle b = matrices(g);
  const Rational kappa = laplacian_minor_det(b.L, 0);
  if (kappa.is_zero()) throw SingularError("kappa_w = 0: Kirchhoff indices undefined");
  KirchhoffReport rep{kappa, Matrix<Rational>(n, n, Rational(0)),
                      Rational(0), Rational(0), Rational(0), Rational(0), LaurentPoly()};
  const auto d = g.weighted_degrees();
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const Rational r = laplacian_minor_det(b.L, p, q) / kappa;
      rep.resistances.at(p, q) = r;
      rep.resistances.at(q, p) = r;
      rep.kf += r;
      rep.kf_star += d[p] * d[q] * r;
      rep.kf_plus += (d[p] + d[q]) * r;
      rep.kf_z += (d[p] - Rational(2)) * (d[q] - Rational(2)) * r;
    }
  }
  rep.kf_z_poly.add_term(2, rep.kf_star);
  rep.kf_z_poly.add_term(1, Rational(-2) * rep.kf_plus);
  rep.kf_z_poly.add_term(0, Rational(4) * rep.kf);
  return rep;
}

std::pair<Rational, double> spectral_kf_check(const WeightedGraph& g) {
  for (const auto& e : g.edges())
    if (e.w.sign() <= 0) throw PositivityError("spectral check requires positive weights");
  const KirchhoffReport rep = kirchhoff_report(g);
  const int n = g.vertex_count();
  const MatrixBundle b = matrices(g);
  Eigen::MatrixXd L(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) L(i, j) = b.L.at(i, j).to_double();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
  const auto& mu = solver.eigenvalues();  // ascending; mu[0] ~ 0
  double sum = 0.0;
  for (int i = 1; i < n; ++i) sum += 1.0 / mu[i];
  return {rep.kf, n * sum};
}

}  // namespace zetakirch
