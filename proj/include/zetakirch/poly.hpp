#ifndef ZETAKIRCH_POLY_HPP
#define ZETAKIRCH_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zetakirch/rational.hpp"

namespace zetakirch {

enum class Var { U, T };

/// Sparse bivariate polynomial in (u, t) over Rational.
/// Terms are keyed by (deg_u, deg_t); zero coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (deg_u, deg_t)
  using TermMap = std::map<Key, Rational>;

  BiPoly() = default;
  explicit BiPoly(const Rational& c) { add_term(0, 0, c); }
  explicit BiPoly(int c) { add_term(0, 0, Rational(c)); }

  static BiPoly monomial(int deg_u, int deg_t, const Rational& c) {
    BiPoly p;
    p.add_term(deg_u, deg_t, c);
    return p;
  }
  static BiPoly var_u() { return monomial(1, 0, Rational(1)); }
  static BiPoly var_t() { return monomial(0, 1, Rational(1)); }

  void add_term(int deg_u, int deg_t, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int max_deg_u() const;
  int max_deg_t() const;
  Rational coeff(int deg_u, int deg_t) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  BiPoly scaled(const Rational& c) const;
  BiPoly pow(unsigned e) const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly derivative(Var v) const;
  Rational eval(const Rational& u, const Rational& t) const;
  BiPoly eval_u(const Rational& u) const;  // substitute u, keep t symbolic

  std::string str() const;  // deg_u major, deg_t minor, ascending

 private:
  TermMap terms_;
};

/// Sparse Laurent polynomial in t (finitely many negative powers).
class LaurentPoly {
 public:
  using TermMap = std::map<int, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c) { add_term(0, c); }
  explicit LaurentPoly(int c) { add_term(0, Rational(c)); }
  static LaurentPoly monomial(int deg, const Rational& c) {
    LaurentPoly p;
    p.add_term(deg, c);
    return p;
  }

  void add_term(int deg, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int min_deg() const;
  int max_deg() const;
  Rational coeff(int deg) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly scaled(const Rational& c) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  Rational eval(const Rational& t) const;  // t must be nonzero if min_deg < 0

  std::string str() const;

 private:
  TermMap terms_;
};

BiPoly poly_derivative(const BiPoly& p, Var v);

/// Evaluate p at (u, t) = (1 - 1/t, t), expanded exactly as a Laurent polynomial.
LaurentPoly substitute_curve(const BiPoly& p);

/// Exact quotient p / d in Q[u, t]; throws DivisibilityError when d does not divide p.
BiPoly poly_exact_div(const BiPoly& p, const BiPoly& d);

/// With p = (1-t)^k * q, returns q(1); throws DivisibilityError when (1-t)^k
/// does not divide p. A global factor t^s is allowed (it is 1 at t = 1).
Rational laurent_quotient_at_one(const LaurentPoly& p, unsigned k);

/// Restrict a BiPoly with no u-terms to a Laurent polynomial in t.
LaurentPoly to_laurent(const BiPoly& p);

LaurentPoly laurent_shifted(const LaurentPoly& p, int shift);
LaurentPoly laurent_linear(const Rational& c1, const Rational& c0);  // c1*t + c0

}  // namespace zetakirch

#endif
