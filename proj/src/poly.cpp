#include "zetakirch/poly.hpp"

#include <sstream>

#include "zetakirch/errors.hpp"

namespace zetakirch {

void BiPoly::add_term(int deg_u, int deg_t, const Rational& c) {
  if (c.is_zero()) return;
  if (deg_u < 0 || deg_t < 0) throw InternalError("negative exponent in BiPoly");
  const Key key{deg_u, deg_t};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int BiPoly::max_deg_u() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BiPoly::max_deg_t() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

Rational BiPoly::coeff(int deg_u, int deg_t) const {
  auto it = terms_.find({deg_u, deg_t});
  return it == terms_.end() ? Rational(0) : it->second;
}

BiPoly BiPoly::operator-() const {
  BiPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

BiPoly BiPoly::scaled(const Rational& c) const {
  BiPoly out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly acc(1);
  BiPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

BiPoly BiPoly::derivative(Var v) const {
  BiPoly out;
  for (const auto& [k, c] : terms_) {
    if (v == Var::U) {
      if (k.first > 0) out.add_term(k.first - 1, k.second, c * Rational(k.first));
    } else {
      if (k.second > 0) out.add_term(k.first, k.second - 1, c * Rational(k.second));
    }
  }
  return out;
}

Rational BiPoly::eval(const Rational& u, const Rational& t) const {
  // Powers cached up to the maximal degrees actually present.
  std::vector<Rational> pu{Rational(1)}, pt{Rational(1)};
  auto power = [](std::vector<Rational>& cache, const Rational& base, int e) {
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  Rational acc(0);
  for (const auto& [k, c] : terms_)
    acc += c * power(pu, u, k.first) * power(pt, t, k.second);
  return acc;
}

BiPoly BiPoly::eval_u(const Rational& u) const {
  std::vector<Rational> pu{Rational(1)};
  BiPoly out;
  for (const auto& [k, c] : terms_) {
    while (static_cast<int>(pu.size()) <= k.first) pu.push_back(pu.back() * u);
    out.add_term(0, k.second, c * pu[k.first]);
  }
  return out;
}

namespace {

void append_monomial(std::ostringstream& os, bool first, const Rational& c,
                     const std::string& vars) {
  Rational a = rational_abs(c);
  if (first) {
    if (c.sign() < 0) os << "-";
  } else {
    os << (c.sign() < 0 ? " - " : " + ");
  }
  if (vars.empty()) {
    os << a.str();
  } else if (a.is_one()) {
    os << vars;
  } else {
    os << a.str() << "*" << vars;
  }
}

std::string power_str(const char* name, int e) {
  if (e == 0) return "";
  std::string s = name;
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string vars = power_str("u", k.first);
    std::string tp = power_str("t", k.second);
    if (!vars.empty() && !tp.empty()) vars += "*";
    vars += tp;
    append_monomial(os, first, c, vars);
    first = false;
  }
  return os.str();
}

void LaurentPoly::add_term(int deg, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(deg);
  if (it == terms_.end()) {
    terms_.emplace(deg, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int LaurentPoly::min_deg() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_deg() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Rational LaurentPoly::coeff(int deg) const {
  auto it = terms_.find(deg);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

Rational LaurentPoly::eval(const Rational& t) const {
  if (!terms_.empty() && min_deg() < 0 && t.is_zero())
    throw InternalError("Laurent evaluation at t = 0 with negative powers");
  Rational acc(0);
  for (const auto& [k, c] : terms_) acc += c * rational_pow(t, k);
  return acc;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string vars;
    if (k != 0) {
      vars = "t";
      if (k != 1) vars += "^" + std::to_string(k);
    }
    append_monomial(os, first, c, vars);
    first = false;
  }
  return os.str();
}

BiPoly poly_derivative(const BiPoly& p, Var v) { return p.derivative(v); }

LaurentPoly substitute_curve(const BiPoly& p) {
  // u^a t^b -> (1 - 1/t)^a t^b = sum_j C(a,j) (-1)^j t^(b-j).
  LaurentPoly out;
  for (const auto& [k, c] : p.terms()) {
    const int a = k.first, b = k.second;
    for (int j = 0; j <= a; ++j) {
      Rational term = c * binomial(a, j);
      if (j & 1) term = -term;
      out.add_term(b - j, term);
    }
  }
  return out;
}

BiPoly poly_exact_div(const BiPoly& p, const BiPoly& d) {
  if (d.is_zero()) throw InternalError("polynomial division by zero");
  BiPoly rem = p;
  BiPoly quot;
  const auto& dlt = *d.terms().rbegin();  // leading term in (deg_u, deg_t) lex order
  while (!rem.is_zero()) {
    const auto& rlt = *rem.terms().rbegin();
    const int du = rlt.first.first - dlt.first.first;
    const int dt = rlt.first.second - dlt.first.second;
    if (du < 0 || dt < 0)
      throw DivisibilityError("polynomial division leaves a remainder");
    const Rational qc = rlt.second / dlt.second;
    BiPoly qterm = BiPoly::monomial(du, dt, qc);
    quot += qterm;
    rem -= qterm * d;
  }
  return quot;
}

Rational laurent_quotient_at_one(const LaurentPoly& p, unsigned k) {
  if (p.is_zero()) {
    // Zero is divisible by everything and the quotient is zero.
    return Rational(0);
  }
  // Shift out the global t^min factor (a unit at t = 1).
  const int lo = p.min_deg();
  const int hi = p.max_deg();
  std::vector<Rational> coeffs(static_cast<size_t>(hi - lo + 1));
  for (const auto& [deg, c] : p.terms()) coeffs[static_cast<size_t>(deg - lo)] = c;
  // Divide k times by (t - 1) via synthetic division; p/(1-t)^k = (-1)^k p/(t-1)^k.
  for (unsigned round = 0; round < k; ++round) {
    Rational carry(0);
    for (size_t i = coeffs.size(); i-- > 0;) {
      Rational tmp = coeffs[i] + carry;
      coeffs[i] = carry;
      carry = tmp;
    }
    // carry now holds p(1); it must vanish for the division to be exact.
    if (!carry.is_zero())
      throw DivisibilityError("(1-t)^" + std::to_string(k) +
                              " does not divide the polynomial");
    coeffs.pop_back();
  }
  Rational value(0);
  for (const auto& c : coeffs) value += c;
  if (k & 1) value = -value;
  return value;
}

LaurentPoly to_laurent(const BiPoly& p) {
  LaurentPoly out;
  for (const auto& [k, c] : p.terms()) {
    if (k.first != 0) throw InternalError("to_laurent: polynomial still contains u");
    out.add_term(k.second, c);
  }
  return out;
}

LaurentPoly laurent_shifted(const LaurentPoly& p, int shift) {
  LaurentPoly out;
  for (const auto& [k, c] : p.terms()) out.add_term(k + shift, c);
  return out;
}

LaurentPoly laurent_linear(const Rational& c1, const Rational& c0) {
  LaurentPoly p;
  p.add_term(1, c1);
  p.add_term(0, c0);
  return p;
}

}  // namespace zetakirch
