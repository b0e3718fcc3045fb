#pragma once

#include <string>
#include <vector>

#include "bfun/poly.hpp"
#include "bfun/rational.hpp"

namespace bfun {

/// Dense univariate polynomial over Q; c[i] is the coefficient of s^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> c);

  static UniPoly constant(const Rational& c);
  /// s - a.
  static UniPoly linear_root(const Rational& a);
  /// prod (s - r)^m.
  static UniPoly from_roots(const std::vector<std::pair<Rational, int>>& roots);

  const std::vector<Rational>& coeffs() const { return c_; }
  /// -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const;
  const Rational& lc() const;

  UniPoly monic() const;
  Rational eval(const Rational& x) const;
  /// p(a s + b).
  UniPoly compose_linear(const Rational& a, const Rational& b) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& k);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws InvalidArgument on division by zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

  /// p(s_elem) in the algebra of s_elem, by Horner.
  NcPoly evaluate(const NcPoly& s_elem) const;

  /// "s^2-5/6*s+1" style, descending degree.
  std::string to_string(const std::string& var = "s") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace bfun
