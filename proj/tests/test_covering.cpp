#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "zetakirch/covering.hpp"
#include "zetakirch/derivatives.hpp"
#include "zetakirch/errors.hpp"
#include "zetakirch/spanning.hpp"
#include "zetakirch/zeta.hpp"

using namespace zetakirch;

namespace {

VoltageAssignment load_voltages(const WeightedGraph& g, const GroupData& gd,
                                const std::string& name) {
  VoltageFile vf = parse_vlt(read_file(fixture_path(name)));
  REQUIRE(vf.group_token == gd.name);
  return resolve_voltages(g, gd, vf.element_tokens);
}

}  // namespace

TEST_CASE("builtin groups validate") {
  GroupData z2 = builtin_group("Z2");
  CHECK(z2.group.order() == 2);
  CHECK(z2.irreps.exact);
  CHECK(z2.irreps.reps.size() == 2);
  CHECK(z2.irreps.reps[1].rat[1].at(0, 0) == Rational(-1));

  GroupData s3 = builtin_group("S3");
  CHECK(s3.group.order() == 6);
  CHECK(s3.irreps.exact);
  REQUIRE(s3.irreps.reps.size() == 3);
  CHECK(s3.irreps.reps[0].degree == 1);
  CHECK(s3.irreps.reps[1].degree == 1);
  CHECK(s3.irreps.reps[2].degree == 2);

  GroupData z3 = builtin_group("Z3");
  CHECK_FALSE(z3.irreps.exact);
  CHECK(z3.irreps.reps.size() == 3);

  GroupData z22 = builtin_group("Z2^2");
  CHECK(z22.group.order() == 4);
  CHECK(z22.irreps.exact);
  CHECK(builtin_group("Z2^3").group.order() == 8);
  CHECK(builtin_group("Z4").group.order() == 4);

  CHECK_THROWS_AS(builtin_group("Z1"), UnsupportedGroupError);
  CHECK_THROWS_AS(builtin_group("Z2^4"), UnsupportedGroupError);
  CHECK_THROWS_AS(builtin_group("Q8"), UnsupportedGroupError);
}

TEST_CASE("irrep validation catches corruption") {
  GroupData s3 = builtin_group("S3");
  IrrepSet broken = s3.irreps;
  broken.reps[2].rat[1].at(0, 0) += Rational(1);
  broken.reps[2].num[1].at(0, 0) += 1.0;
  CHECK_THROWS_AS(validate_irreps(s3.group, broken), ValidationError);

  IrrepSet missing = s3.irreps;
  missing.reps.pop_back();
  CHECK_THROWS_AS(validate_irreps(s3.group, missing), ValidationError);
}

TEST_CASE("voltage files parse and resolve") {
  WeightedGraph k3 = load_graph("k3.wgr");
  GroupData z2 = builtin_group("Z2");
  VoltageFile vf = parse_vlt(read_file(fixture_path("k3_z2_one.vlt")));
  CHECK(vf.group_token == "Z2");
  REQUIRE(vf.element_tokens.size() == 3);
  VoltageAssignment alpha = resolve_voltages(k3, z2, vf.element_tokens);
  CHECK(alpha.forward == std::vector<int>{0, 0, 1});
  // reverse arcs get the inverse automatically
  CHECK(alpha.on_arc(z2.group, 4) == 1);
  CHECK(alpha.on_arc(z2.group, 5) == 1);  // Z2 is its own inverse

  CHECK_THROWS_AS(resolve_voltages(k3, z2, {"0", "0"}), ParseError);
  CHECK_THROWS_AS(resolve_voltages(k3, z2, {"0", "0", "2"}), ParseError);
}

TEST_CASE("derived graph of K3/Z2 with one nontrivial edge is the 6-cycle") {
  WeightedGraph k3 = load_graph("k3.wgr");
  GroupData z2 = builtin_group("Z2");
  VoltageAssignment alpha = load_voltages(k3, z2, "k3_z2_one.vlt");
  WeightedGraph cover = derived_graph(k3, z2.group, alpha);
  CHECK(cover.vertex_count() == 6);
  CHECK(cover.edge_count() == 6);
  for (int d : cover.degrees()) CHECK(d == 2);  // connected 2-regular: a cycle
  CHECK(weighted_complexity(cover) == Rational(6));
}

TEST_CASE("trivial voltages and tree lifts disconnect") {
  WeightedGraph k3 = load_graph("k3.wgr");
  GroupData z2 = builtin_group("Z2");
  VoltageAssignment trivial = load_voltages(k3, z2, "k3_z2_trivial.vlt");
  CHECK_THROWS_AS(derived_graph(k3, z2.group, trivial), DisconnectedCoverError);

  WeightedGraph p3 = load_graph("p3.wgr");
  VoltageAssignment both = load_voltages(p3, z2, "p3_z2_both.vlt");
  CHECK_THROWS_AS(derived_graph(p3, z2.group, both), DisconnectedCoverError);
}

TEST_CASE("derived graph preserves local structure") {
  WeightedGraph k4 = load_graph("k4.wgr");
  GroupData s3 = builtin_group("S3");
  VoltageAssignment alpha = load_voltages(k4, s3, "k4_s3.vlt");
  WeightedGraph cover = derived_graph(k4, s3.group, alpha);
  CHECK(cover.vertex_count() == 4 * 6);
  CHECK(cover.edge_count() == 6 * 6);
  const auto base_deg = k4.weighted_degrees();
  const auto cover_deg = cover.weighted_degrees();
  for (int h = 0; h < 6; ++h)
    for (int v = 0; v < 4; ++v) CHECK(cover_deg[h * 4 + v] == base_deg[v]);
}

TEST_CASE("twisted matrix") {
  WeightedGraph k3 = load_graph("k3.wgr");
  GroupData z2 = builtin_group("Z2");
  VoltageAssignment alpha = load_voltages(k3, z2, "k3_z2_one.vlt");

  // trivial representation reassembles W for any voltages
  Matrix<Rational> triv = twisted_matrix(k3, z2.group, alpha, z2.irreps.reps[0]);
  MatrixBundle b = matrices(k3);
  CHECK(triv == b.W);

  // sign representation flips the weight on the voltage-1 edge {1,3}
  Matrix<Rational> tw = twisted_matrix(k3, z2.group, alpha, z2.irreps.reps[1]);
  const int expect[3][3] = {{0, 1, -1}, {1, 0, 1}, {-1, 1, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(tw.at(i, j) == Rational(expect[i][j]));

  // identity voltages with a nontrivial degree-1 representation still give W
  VoltageAssignment id = load_voltages(k3, z2, "k3_z2_trivial.vlt");
  CHECK(twisted_matrix(k3, z2.group, id, z2.irreps.reps[1]) == b.W);
}

TEST_CASE("K_i polynomial") {
  WeightedGraph k3 = load_graph("k3.wgr");
  GroupData z2 = builtin_group("Z2");
  VoltageAssignment alpha = load_voltages(k3, z2, "k3_z2_one.vlt");

  // trivial irrep gives f_w itself
  CHECK(K_i_poly(k3, z2.group, alpha, z2.irreps.reps[0]) == f_w_poly(k3));

  BiPoly k2 = K_i_poly(k3, z2.group, alpha, z2.irreps.reps[1]);
  CHECK(k2.eval(Rational(0), Rational(0)) == Rational(1));
  // on the curve: t^3 det(D - (W_0 - W_1)) = 4 t^3
  LaurentPoly curve = substitute_curve(k2);
  CHECK(curve == LaurentPoly::monomial(3, Rational(4)));

  // the point evaluator tracks the exact polynomial
  for (int i = 1; i <= 3; ++i) {
    const Rational u(i, 5), t(i, 7);
    const Cplx num = K_i_eval(k3, z2.group, alpha, z2.irreps.reps[1], u, t);
    CHECK(std::abs(num - Cplx(k2.eval(u, t).to_double(), 0)) < 1e-9);
  }
  CHECK(std::abs(K_i_eval(k3, z2.group, alpha, z2.irreps.reps[1], Rational(0),
                          Rational(0)) -
                 Cplx(1, 0)) < 1e-12);
}

TEST_CASE("theorem 14 exact on K3/Z2") {
  WeightedGraph k3 = load_graph("k3.wgr");
  GroupData z2 = builtin_group("Z2");
  VoltageAssignment alpha = load_voltages(k3, z2, "k3_z2_one.vlt");
  Theorem14Result res = verify_theorem14(k3, z2, alpha);
  CHECK(res.exact);
  CHECK(res.ok);
  CHECK_FALSE(verify_theorem14(k3, z2, alpha, {}, Rational(1)).ok);

  // divisibility: f_w(G) divides f of the cover
  WeightedGraph cover = derived_graph(k3, z2.group, alpha);
  CHECK_NOTHROW(poly_exact_div(f_w_poly(cover), f_w_poly(k3)));
}

TEST_CASE("theorem 14 exact on K4/Z2") {
  WeightedGraph k4 = load_graph("k4.wgr");
  GroupData z2 = builtin_group("Z2");
  VoltageAssignment alpha = load_voltages(k4, z2, "k4_z2.vlt");
  CHECK(verify_theorem14(k4, z2, alpha).ok);
}

TEST_CASE("theorem 14 numeric on K3/Z3") {
  WeightedGraph k3 = load_graph("k3.wgr");
  GroupData z3 = builtin_group("Z3");
  VoltageAssignment alpha = load_voltages(k3, z3, "k3_z3_one.vlt");
  Theorem14Result res = verify_theorem14(k3, z3, alpha);
  CHECK_FALSE(res.exact);
  CHECK(res.ok);
  CHECK_FALSE(verify_theorem14(k3, z3, alpha, {}, Rational(1, 100)).ok);
}

TEST_CASE("theorem 15 on K3/Z2: formula = direct = 6") {
  WeightedGraph k3 = load_graph("k3.wgr");
  GroupData z2 = builtin_group("Z2");
  VoltageAssignment alpha = load_voltages(k3, z2, "k3_z2_one.vlt");
  Theorem15Result res = verify_theorem15(k3, z2, alpha);
  CHECK(res.ok);
  CHECK(res.direct == Rational(6));
  CHECK(res.formula_exact == Rational(6));
  CHECK_FALSE(verify_theorem15(k3, z2, alpha, {}, Rational(1)).ok);
}

TEST_CASE("theorem 15 on K4/Z2 with the brute-force oracle") {
  WeightedGraph k4 = load_graph("k4.wgr");
  GroupData z2 = builtin_group("Z2");
  VoltageAssignment alpha = load_voltages(k4, z2, "k4_z2.vlt");
  WeightedGraph cover = derived_graph(k4, z2.group, alpha);
  Theorem15Result res = verify_theorem15(k4, z2, alpha);
  CHECK(res.ok);
  CHECK(res.direct == brute_force_complexity(cover));
}

TEST_CASE("theorem 15 and 16 numeric paths agree with exact on Z2") {
  WeightedGraph k4 = load_graph("k4.wgr");
  GroupData z2 = builtin_group("Z2");
  VoltageAssignment alpha = load_voltages(k4, z2, "k4_z2.vlt");
  GroupData z2num = z2;
  z2num.irreps = as_numeric(z2.irreps);

  Theorem15Result exact = verify_theorem15(k4, z2, alpha);
  Theorem15Result numeric = verify_theorem15(k4, z2num, alpha);
  CHECK(numeric.ok);
  CHECK(std::abs(numeric.formula_numeric - exact.formula_exact.to_double()) < 1e-9);

  CHECK(verify_theorem16(k4, z2num, alpha).ok);
  CHECK(verify_theorem14(k4, z2num, alpha).ok);
  CHECK(verify_corollary3(k4, z2num, alpha).ok);
}

TEST_CASE("theorem 16 exact on K3/Z2 and K4/Z2") {
  WeightedGraph k3 = load_graph("k3.wgr");
  GroupData z2 = builtin_group("Z2");
  VoltageAssignment a3 = load_voltages(k3, z2, "k3_z2_one.vlt");
  Theorem16Result r3 = verify_theorem16(k3, z2, a3);
  CHECK(r3.exact);
  CHECK(r3.variant1);
  CHECK(r3.variant2);
  CHECK(r3.variant3);
  CHECK(r3.corollary2_consistent);
  // Kf^z of C6 is identically zero in t: the cover is 2-regular
  CHECK(r3.cover_kfz_poly.eval(Rational(1)) == Rational(0));

  WeightedGraph k4 = load_graph("k4.wgr");
  VoltageAssignment a4 = load_voltages(k4, z2, "k4_z2.vlt");
  Theorem16Result r4 = verify_theorem16(k4, z2, a4);
  CHECK(r4.ok);
  CHECK_FALSE(verify_theorem16(k4, z2, a4, {}, Rational(1)).ok);
}

TEST_CASE("theorem 16 numeric on K3/Z3") {
  WeightedGraph k3 = load_graph("k3.wgr");
  GroupData z3 = builtin_group("Z3");
  VoltageAssignment alpha = load_voltages(k3, z3, "k3_z3_one.vlt");
  Theorem16Result res = verify_theorem16(k3, z3, alpha);
  CHECK_FALSE(res.exact);
  CHECK(res.ok);
  CHECK_FALSE(verify_theorem16(k3, z3, alpha, {}, Rational(1, 10)).ok);
}

TEST_CASE("corollary 3") {
  WeightedGraph k3 = load_graph("k3.wgr");
  GroupData z2 = builtin_group("Z2");
  VoltageAssignment a3 = load_voltages(k3, z2, "k3_z2_one.vlt");
  Corollary3Result r3 = verify_corollary3(k3, z2, a3);
  CHECK(r3.ok);
  CHECK(r3.lhs == Rational(0));  // m = n kills every correction term

  WeightedGraph k4 = load_graph("k4.wgr");
  VoltageAssignment a4 = load_voltages(k4, z2, "k4_z2.vlt");
  Corollary3Result r4 = verify_corollary3(k4, z2, a4);
  CHECK(r4.ok);
  CHECK(r4.lhs == kirchhoff_report(derived_graph(k4, z2.group, a4)).kf_z);
  CHECK_FALSE(verify_corollary3(k4, z2, a4, {}, Rational(1)).ok);

  // weighted graphs are rejected
  WeightedGraph p3 = load_graph("p3.wgr");
  GroupData z2b = builtin_group("Z2");
  VoltageAssignment pa = load_voltages(p3, z2b, "p3_z2_both.vlt");
  CHECK_THROWS_AS(verify_corollary3(p3, z2b, pa), PreconditionError);

  // identity voltages never reach the formula: the cover is disconnected
  VoltageAssignment id = load_voltages(k3, z2, "k3_z2_trivial.vlt");
  CHECK_THROWS_AS(verify_corollary3(k3, z2, id), DisconnectedCoverError);
}

TEST_CASE("user-supplied group data passes validation and drives the theorems") {
  // Hand-built Z2: table, identity and both characters supplied directly.
  FiniteGroup group({{0, 1}, {1, 0}});
  CHECK(group.identity() == 0);
  CHECK(group.inverse(1) == 1);

  auto one_by_one = [](int v) {
    Matrix<Rational> m(1, 1, Rational(v));
    return m;
  };
  Representation trivial{1, true, {one_by_one(1), one_by_one(1)}, {}};
  Representation sign{1, true, {one_by_one(1), one_by_one(-1)}, {}};
  for (auto* rep : {&trivial, &sign})
    for (const auto& mat : rep->rat) {
      Matrix<Cplx> c(1, 1, Cplx(mat.at(0, 0).to_double(), 0));
      rep->num.push_back(c);
    }
  IrrepSet irreps{true, {trivial, sign}};
  validate_irreps(group, irreps);

  GroupData gd{std::move(group), std::move(irreps), {"0", "1"}, "Z2"};
  WeightedGraph k3 = load_graph("k3.wgr");
  VoltageAssignment alpha{{0, 0, 1}};
  CHECK(verify_theorem15(k3, gd, alpha).ok);

  // a non-group table is rejected outright
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup({{1, 0}, {0, 2}}), ValidationError);
}

TEST_CASE("theorem 15 on K4/S3 (exact 2-dim irrep)") {
  WeightedGraph k4 = load_graph("k4.wgr");
  GroupData s3 = builtin_group("S3");
  VoltageAssignment alpha = load_voltages(k4, s3, "k4_s3.vlt");
  Theorem15Result res = verify_theorem15(k4, s3, alpha);
  CHECK(res.exact);
  CHECK(res.ok);
  // kappa of the 24-vertex cover comes out of the formula as an exact integer
  CHECK(res.direct == res.formula_exact);
}
