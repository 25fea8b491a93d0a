#ifndef ZETAKIRCH_DERIVATIVES_HPP
#define ZETAKIRCH_DERIVATIVES_HPP

#include <string>
#include <vector>

#include "zetakirch/graph.hpp"
#include "zetakirch/poly.hpp"
#include "zetakirch/spanning.hpp"

namespace zetakirch {

struct IdentityCheck {
  std::string name;
  LaurentPoly lhs, rhs;
  bool ok;
  LaurentPoly diff;
};

/// All five partial derivatives of f_w restricted to the curve u = 1 - 1/t,
/// each paired with its closed-form right-hand side built from kappa_w, w(G),
/// n and Kf^z_w(t):
///   d/dt     -> 2 t^(n-2) (w(G) t - n) kappa_w
///   d/du     -> -2 t^n (w(G) t - n) kappa_w
///   d2/dt2   -> 2 t^(n-4) kappa_w (Kf^z_w(t) + n t (2 w(G) t - 2n + 1))
///   d2/dt du -> 2 t^(n-2) kappa_w ((n - w(G) t)(n+1) t - Kf^z_w(t))
///   d2/du2   -> 2 t^n kappa_w (Kf^z_w(t) - n t)
struct CurveReport {
  LaurentPoly d_t, d_u, d_tt, d_tu, d_uu;
  LaurentPoly rhs_t, rhs_u, rhs_tt, rhs_tu, rhs_uu;
  std::vector<IdentityCheck> checks;
  bool all_ok;
};

/// rhs_offset perturbs every right-hand side by the given constant; nonzero
/// values exist to drive negative controls.
CurveReport curve_report(const WeightedGraph& g, const Rational& rhs_offset = Rational(0));

bool verify_theorems_11_12(const WeightedGraph& g, const Rational& rhs_offset = Rational(0));

struct Corollary1Result {
  Rational dt, neg_du, expected;
  bool ok;
};
/// dF/dt|(0,1) = -dF/du|(0,1) = 2 (m-n) kappa; requires unit weights.
Corollary1Result verify_corollary1(const WeightedGraph& g,
                                   const Rational& rhs_offset = Rational(0));

struct Theorem13Result {
  Rational lhs, rhs;
  bool ok;
};
/// The curve limit in closed form: N(t) = (1+t)^(m-n) f_w(0,t)
/// + 2^(m-n+1) (w(G)-n) kappa_w (1-t) with (1-t)^2 | N(t), against
/// 2^(m-n) (Kf^z_w + (m+n) w(G) - (m+n) n + n) kappa_w. Needs m >= n.
Theorem13Result verify_theorem13(const WeightedGraph& g,
                                 const Rational& rhs_offset = Rational(0));

struct HashimotoNorthshieldResult {
  Rational value, expected;
  bool ok;
};
/// (1-t)^{-r} Z^{-1} at t = 1 equals 2^r (1-r) kappa; unit weights, r = m-n+1 > 1.
HashimotoNorthshieldResult verify_hashimoto_northshield(
    const WeightedGraph& g, const Rational& rhs_offset = Rational(0));

}  // namespace zetakirch

#endif
