#include "bfun/unipoly.hpp"

#include "bfun/errors.hpp"

namespace bfun {

UniPoly::UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::linear_root(const Rational& a) { return UniPoly({Rational(-a), Rational(1)}); }

UniPoly UniPoly::from_roots(const std::vector<std::pair<Rational, int>>& roots) {
  UniPoly p = constant(1);
  for (const auto& [r, m] : roots)
    for (int k = 0; k < m; ++k) p = p * linear_root(r);
  return p;
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::lc() const {
  if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return c_.back();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly out = *this;
  const Rational l = lc();
  for (auto& x : out.c_) x /= l;
  return out;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

UniPoly UniPoly::compose_linear(const Rational& a, const Rational& b) const {
  UniPoly lin({b, a});
  UniPoly out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * lin + constant(*it);
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(UniPoly a, const Rational& k) {
  for (auto& x : a.c_) x *= k;
  a.trim();
  return a;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw InvalidArgument("polynomial division by zero");
  UniPoly r = *this;
  if (degree() < d.degree()) return {UniPoly(), r};
  std::vector<Rational> q(static_cast<std::size_t>(degree() - d.degree() + 1), Rational(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int k = r.degree() - d.degree();
    Rational f = r.lc() / d.lc();
    q[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= d.degree(); ++i) r.c_[static_cast<std::size_t>(i + k)] -= f * d.c_[static_cast<std::size_t>(i)];
    r.trim();
  }
  return {UniPoly(std::move(q)), r};
}

NcPoly UniPoly::evaluate(const NcPoly& s) const {
  NcPoly out(s.algebra());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    out = s * out + NcPoly::constant(s.algebra(), *it);
  return out;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational a = abs(c);
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    const bool unit = a == 1;
    if (i == 0 || !unit) out += bfun::to_string(Rational(a));
    if (i == 0) continue;
    if (!unit) out += "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace bfun
