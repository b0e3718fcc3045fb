#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "bfun/cli.hpp"
#include "bfun/errors.hpp"

namespace bfun {
inline std::ostream& operator<<(std::ostream& o, const NcPoly& p) { return o << p.to_string(); }
inline std::ostream& operator<<(std::ostream& o, const UniPoly& p) { return o << p.to_string(); }
}  // namespace bfun

namespace th {

using namespace bfun;

inline NcPoly P(const std::string& text, const AlgebraPtr& a) { return cli::parse_poly(text, a); }

inline std::vector<NcPoly> Ps(const std::vector<std::string>& texts, const AlgebraPtr& a) {
  std::vector<NcPoly> out;
  for (const auto& t : texts) out.push_back(P(t, a));
  return out;
}

/// Every element of `a` lies in the left ideal generated by `b`, and vice versa.
inline bool same_left_ideal(const AlgebraPtr& ctx, const std::vector<NcPoly>& a, const std::vector<NcPoly>& b) {
  auto ga = buchberger(ctx, a), gb = buchberger(ctx, b);
  for (const auto& p : a)
    if (!gb.contains(p.in_algebra(ctx))) return false;
  for (const auto& p : b)
    if (!ga.contains(p.in_algebra(ctx))) return false;
  return true;
}

inline UniPoly from_roots(const std::vector<std::pair<Rational, int>>& roots) {
  UniPoly p = UniPoly::constant(1);
  for (const auto& [r, m] : roots)
    for (int i = 0; i < m; ++i) p = p * UniPoly::linear_root(r);
  return p;
}

inline Rational q(const std::string& s) { return parse_rational(s); }

/// Random polynomial with `terms` terms, total degree <= deg, small integer coefficients.
inline NcPoly random_poly(std::mt19937& rng, const AlgebraPtr& a, int terms, int deg, const std::vector<int>& vars = {}) {
  std::vector<int> vs = vars;
  if (vs.empty())
    for (int i = 0; i < a->nvars(); ++i) vs.push_back(i);
  std::uniform_int_distribution<int> coef(-5, 5), pick(0, static_cast<int>(vs.size()) - 1), dd(0, deg);
  NcPoly p(a);
  for (int t = 0; t < terms; ++t) {
    Mono m;
    int d = dd(rng);
    for (int k = 0; k < d; ++k) m[vs[static_cast<std::size_t>(pick(rng))]] += 1;
    int c = coef(rng);
    if (c == 0) c = 1;
    p += NcPoly::monomial(a, Rational(c), m);
  }
  return p;
}

}  // namespace th
