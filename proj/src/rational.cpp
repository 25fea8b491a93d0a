#include "zetakirch/rational.hpp"

#include <cctype>

namespace zetakirch {

namespace {

bool valid_integer_token(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  size_t i = 0;
  if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer_token(text, true))
      throw ParseError("bad rational literal '" + std::string(text) + "'");
    return Rational(mpq_class(mpz_class(std::string(text))));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!valid_integer_token(num, true) || !valid_integer_token(den, false))
    throw ParseError("bad rational literal '" + std::string(text) + "'");
  mpz_class d{std::string(den)};
  if (d == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(mpz_class{std::string(num)}, d);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (exponent < 0) {
    if (base.is_zero()) throw InternalError("zero raised to negative power");
    return Rational(1) / rational_pow(base, -exponent);
  }
  Rational acc(1);
  Rational b = base;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

Rational rational_abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

}  // namespace zetakirch
