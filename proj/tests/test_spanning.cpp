#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "zetakirch/errors.hpp"
#include "zetakirch/random_graphs.hpp"
#include "zetakirch/spanning.hpp"

using namespace zetakirch;

TEST_CASE("weighted complexity golden values") {
  CHECK(weighted_complexity(load_graph("p3.wgr")) == Rational(6));
  CHECK(weighted_complexity(load_graph("k3.wgr")) == Rational(3));
  CHECK(weighted_complexity(load_graph("k4.wgr")) == Rational(16));
}

TEST_CASE("brute force complexity") {
  CHECK(brute_force_complexity(load_graph("p3.wgr")) == Rational(6));
  CHECK(brute_force_complexity(load_graph("k3.wgr")) == Rational(3));
  // K3 with weights 2, 3, 5: trees drop one edge each, 2*3 + 3*5 + 2*5 = 31
  WeightedGraph k3w = WeightedGraph::parse("3 3\n1 2 2\n2 3 3\n1 3 5");
  CHECK(brute_force_complexity(k3w) == Rational(31));
  CHECK(weighted_complexity(k3w) == Rational(31));

  // enumeration guard
  std::vector<Edge> edges;
  for (int v = 1; v < 11; ++v) edges.push_back({0, v, Rational(1)});
  WeightedGraph star(11, std::move(edges));
  CHECK_THROWS_AS(brute_force_complexity(star), SizeError);
}

TEST_CASE("matrix-tree equals brute force on random graphs") {
  std::mt19937_64 rng(42);
  RandomGraphConfig cfg;
  cfg.require_nonzero_kappa = false;  // equality must hold even at kappa = 0
  for (int i = 0; i < 60; ++i) {
    WeightedGraph g = random_connected_graph(rng, cfg);
    CHECK(weighted_complexity(g) == brute_force_complexity(g));
  }
}

TEST_CASE("Laplacian minor is independent of the deleted index") {
  std::mt19937_64 rng(43);
  RandomGraphConfig cfg;
  cfg.require_nonzero_kappa = false;
  for (int i = 0; i < 20; ++i) {
    WeightedGraph g = random_connected_graph(rng, cfg);
    MatrixBundle b = matrices(g);
    const Rational first = laplacian_minor_det(b.L, 0);
    for (int k = 1; k < g.vertex_count(); ++k)
      CHECK(laplacian_minor_det(b.L, k) == first);
  }
}

TEST_CASE("resistance distances of the weighted P3") {
  WeightedGraph p3 = load_graph("p3.wgr");
  CHECK(resistance_distance(p3, 0, 1) == Rational(1, 2));
  CHECK(resistance_distance(p3, 0, 2) == Rational(5, 6));
  CHECK(resistance_distance(p3, 1, 2) == Rational(1, 3));
  CHECK(resistance_distance(p3, 1, 1) == Rational(0));
  CHECK(resistance_distance(p3, 1, 0) == Rational(1, 2));
}

TEST_CASE("resistance in K4 via symmetry") {
  WeightedGraph k4 = load_graph("k4.wgr");
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) CHECK(resistance_distance(k4, p, q) == Rational(1, 2));
}

TEST_CASE("kappa = 0 raises SingularError") {
  // kappa = 1*1 + 1*(-1/2) + 1*(-1/2) = 0
  WeightedGraph g = WeightedGraph::parse("3 3\n1 2 1\n2 3 1\n1 3 -1/2");
  CHECK(weighted_complexity(g) == Rational(0));
  CHECK_THROWS_AS(resistance_distance(g, 0, 1), SingularError);
  CHECK_THROWS_AS(kirchhoff_report(g), SingularError);
}

TEST_CASE("kirchhoff report for the weighted P3") {
  KirchhoffReport rep = kirchhoff_report(load_graph("p3.wgr"));
  CHECK(rep.kappa_w == Rational(6));
  CHECK(rep.kf == Rational(5, 3));
  CHECK(rep.kf_star == Rational(15));
  CHECK(rep.kf_plus == Rational(31, 3));
  CHECK(rep.kf_z == Rational(1));
  // 15 t^2 - 62/3 t + 20/3
  CHECK(rep.kf_z_poly.coeff(2) == Rational(15));
  CHECK(rep.kf_z_poly.coeff(1) == Rational(-62, 3));
  CHECK(rep.kf_z_poly.coeff(0) == Rational(20, 3));
  CHECK(rep.kf_z_poly.eval(Rational(1)) == rep.kf_z);
}

TEST_CASE("kirchhoff report golden values on K3 and K4") {
  KirchhoffReport k3 = kirchhoff_report(load_graph("k3.wgr"));
  CHECK(k3.kf_z == Rational(0));
  CHECK(k3.kf == Rational(2));

  KirchhoffReport k4 = kirchhoff_report(load_graph("k4.wgr"));
  CHECK(k4.kf == Rational(3));
  CHECK(k4.kf_star == Rational(27));
  CHECK(k4.kf_plus == Rational(18));
  CHECK(k4.kf_z == Rational(3));
}

TEST_CASE("kirchhoff identities on random graphs") {
  std::mt19937_64 rng(44);
  RandomGraphConfig cfg;
  for (int i = 0; i < 25; ++i) {
    WeightedGraph g = random_connected_graph(rng, cfg);
    KirchhoffReport rep = kirchhoff_report(g);
    CHECK(rep.kf_z == rep.kf_star - Rational(2) * rep.kf_plus + Rational(4) * rep.kf);
    CHECK(rep.kf_z_poly.eval(Rational(1)) == rep.kf_z);
    const int n = g.vertex_count();
    for (int p = 0; p < n; ++p) {
      CHECK(rep.resistances.at(p, p) == Rational(0));
      for (int q = 0; q < n; ++q) CHECK(rep.resistances.at(p, q) == rep.resistances.at(q, p));
    }
  }
}

TEST_CASE("resistance is a metric for positive weights") {
  std::mt19937_64 rng(45);
  RandomGraphConfig cfg;
  cfg.positive_weights = true;
  for (int i = 0; i < 15; ++i) {
    WeightedGraph g = random_connected_graph(rng, cfg);
    KirchhoffReport rep = kirchhoff_report(g);
    const int n = g.vertex_count();
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        CHECK(rep.resistances.at(p, q) > Rational(0));
        for (int s = 0; s < n; ++s)
          CHECK(rep.resistances.at(p, q) <=
                rep.resistances.at(p, s) + rep.resistances.at(s, q));
      }
  }
}

TEST_CASE("spectral cross-check") {
  auto [kf3, num3] = spectral_kf_check(load_graph("k3.wgr"));
  CHECK(kf3 == Rational(2));
  CHECK(std::abs(num3 - 2.0) < 1e-9);

  auto [kf4, num4] = spectral_kf_check(load_graph("k4.wgr"));
  CHECK(kf4 == Rational(3));
  CHECK(std::abs(num4 - 3.0) < 1e-9);

  auto [kfp, nump] = spectral_kf_check(load_graph("p3_unit.wgr"));
  CHECK(kfp == Rational(4));
  CHECK(std::abs(nump - 4.0) < 1e-9);

  WeightedGraph neg = WeightedGraph::parse("2 1\n1 2 -1");
  CHECK_THROWS_AS(spectral_kf_check(neg), PositivityError);
}

TEST_CASE("spectral cross-check agrees on random positive graphs") {
  std::mt19937_64 rng(46);
  RandomGraphConfig cfg;
  cfg.positive_weights = true;
  for (int i = 0; i < 10; ++i) {
    WeightedGraph g = random_connected_graph(rng, cfg);
    auto [exact, numeric] = spectral_kf_check(g);
    const double e = exact.to_double();
    CHECK(std::abs(e - numeric) <= 1e-9 * std::max(1.0, std::abs(e)));
  }
}
