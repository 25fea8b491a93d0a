#include "zetakirch/derivatives.hpp"

#include "zetakirch/errors.hpp"
#include "zetakirch/zeta.hpp"

namespace zetakirch {

namespace {

IdentityCheck make_check(const std::string& name, const LaurentPoly& lhs,
                         const LaurentPoly& rhs) {
  LaurentPoly diff = lhs - rhs;
  return {name, lhs, rhs, diff.is_zero(), diff};
}

}  // namespace

CurveReport curve_report(const WeightedGraph& g, const Rational& rhs_offset) {
  const int n = g.vertex_count();
  const Rational wG = g.total_weight();
  const KirchhoffReport kr = kirchhoff_report(g);  // throws SingularError if kappa = 0
  const Rational& kappa = kr.kappa_w;
  const LaurentPoly& kfz = kr.kf_z_poly;

  const BiPoly f = f_w_poly(g);
  const BiPoly ft = f.derivative(Var::T);
  const BiPoly fu = f.derivative(Var::U);

  CurveReport rep;
  rep.d_t = substitute_curve(ft);
  rep.d_u = substitute_curve(fu);
  rep.d_tt = substitute_curve(ft.derivative(Var::T));
  rep.d_tu = substitute_curve(ft.derivative(Var::U));
  rep.d_uu = substitute_curve(fu.derivative(Var::U));

  // 2 t^(n-2) (w(G) t - n) kappa
  rep.rhs_t = laurent_shifted(laurent_linear(wG, Rational(-n)).scaled(Rational(2) * kappa), n - 2);
  // -2 t^n (w(G) t - n) kappa
  rep.rhs_u = laurent_shifted(laurent_linear(wG, Rational(-n)).scaled(Rational(-2) * kappa), n);
  // 2 t^(n-4) kappa (Kf^z(t) + n t (2 w(G) t - 2n + 1))
  {
    LaurentPoly inner = kfz;
    inner += laurent_shifted(laurent_linear(Rational(2) * wG, Rational(1 - 2 * n)).scaled(Rational(n)), 1);
    rep.rhs_tt = laurent_shifted(inner.scaled(Rational(2) * kappa), n - 4);
  }
  // 2 t^(n-2) kappa ((n - w(G) t)(n+1) t - Kf^z(t))
  {
    LaurentPoly inner = laurent_shifted(laurent_linear(-wG, Rational(n)).scaled(Rational(n + 1)), 1);
    inner -= kfz;
    rep.rhs_tu = laurent_shifted(inner.scaled(Rational(2) * kappa), n - 2);
  }
  // 2 t^n kappa (Kf^z(t) - n t)
  {
    LaurentPoly inner = kfz;
    inner.add_term(1, Rational(-n));
    rep.rhs_uu = laurent_shifted(inner.scaled(Rational(2) * kappa), n);
  }

  if (!rhs_offset.is_zero()) {
    for (LaurentPoly* p : {&rep.rhs_t, &rep.rhs_u, &rep.rhs_tt, &rep.rhs_tu, &rep.rhs_uu})
      p->add_term(0, rhs_offset);
  }

  rep.checks.push_back(make_check("df/dt on curve", rep.d_t, rep.rhs_t));
  rep.checks.push_back(make_check("df/du on curve", rep.d_u, rep.rhs_u));
  rep.checks.push_back(make_check("d2f/dt2 on curve", rep.d_tt, rep.rhs_tt));
  rep.checks.push_back(make_check("d2f/dtdu on curve", rep.d_tu, rep.rhs_tu));
  rep.checks.push_back(make_check("d2f/du2 on curve", rep.d_uu, rep.rhs_uu));
  rep.all_ok = true;
  for (const auto& c : rep.checks) rep.all_ok = rep.all_ok && c.ok;
  return rep;
}

bool verify_theorems_11_12(const WeightedGraph& g, const Rational& rhs_offset) {
  return curve_report(g, rhs_offset).all_ok;
}

Corollary1Result verify_corollary1(const WeightedGraph& g, const Rational& rhs_offset) {
  if (!g.is_unit_weight())
    throw PreconditionError("corollary 1 is stated for unit weights");
  const int m = g.edge_count(), n = g.vertex_count();
  const Rational kappa = weighted_complexity(g);
  const BiPoly f = f_w_poly(g);
  const Rational dt = f.derivative(Var::T).eval(Rational(0), Rational(1));
  const Rational du = f.derivative(Var::U).eval(Rational(0), Rational(1));
  Corollary1Result res;
  res.dt = dt;
  res.neg_du = -du;
  res.expected = Rational(2 * (m - n)) * kappa + rhs_offset;
  res.ok = (res.dt == res.expected) && (res.neg_du == res.expected);
  return res;
}

Theorem13Result verify_theorem13(const WeightedGraph& g, const Rational& rhs_offset) {
  const int m = g.edge_count(), n = g.vertex_count();
  if (m < n) throw PreconditionError("theorem 13 needs Betti number >= 1 (m >= n)");
  const Rational kappa = weighted_complexity(g);
  const KirchhoffReport kr = kirchhoff_report(g);
  const Rational wG = g.total_weight();

  LaurentPoly f0 = to_laurent(f_w_poly(g).eval_u(Rational(0)));
  LaurentPoly one_plus_t = laurent_linear(Rational(1), Rational(1));
  LaurentPoly npoly = f0;
  for (int i = 0; i < m - n; ++i) npoly *= one_plus_t;
  const Rational c = rational_pow(Rational(2), m - n + 1) * (wG - Rational(n)) * kappa;
  npoly += laurent_linear(-c, c);  // + 2^(m-n+1) (w(G)-n) kappa (1 - t)

  Theorem13Result res;
  res.lhs = laurent_quotient_at_one(npoly, 2);
  res.rhs = rational_pow(Rational(2), m - n) *
                (kr.kf_z + Rational(m + n) * wG - Rational((m + n) * n) + Rational(n)) *
                kappa +
            rhs_offset;
  res.ok = res.lhs == res.rhs;
  return res;
}

HashimotoNorthshieldResult verify_hashimoto_northshield(const WeightedGraph& g,
                                                        const Rational& rhs_offset) {
  if (!g.is_unit_weight())
    throw PreconditionError("Hashimoto-Northshield is stated for unit weights");
  const int m = g.edge_count(), n = g.vertex_count();
  const int r = m - n + 1;
  if (r <= 1) throw PreconditionError("Hashimoto-Northshield needs Betti number r > 1");
  const Rational kappa = weighted_complexity(g);
  // (1-t)^{-r} (1-t^2)^{m-n} f(t) = (1+t)^{m-n} f(t) / (1-t).
  LaurentPoly f = to_laurent(f_w_poly(g).eval_u(Rational(0)));
  HashimotoNorthshieldResult res;
  res.value = rational_pow(Rational(2), m - n) * laurent_quotient_at_one(f, 1);
  res.expected = rational_pow(Rational(2), r) * Rational(1 - r) * kappa + rhs_offset;
  res.ok = res.value == res.expected;
  return res;
}

}  // namespace zetakirch
