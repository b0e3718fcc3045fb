#include <algorithm>

#include "bfun/errors.hpp"
#include "bfun/groebner.hpp"

namespace bfun {

namespace {

using Vec = std::vector<NcPoly>;

struct Lead {
  int comp = -1;
  Mono m;
  Rational c;
};

Lead lead_of(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return {static_cast<int>(i), v[i].lm(), v[i].lc()};
  return {};
}

void axpy_vec(Vec& v, const Rational& c, const Mono& m, const Vec& g) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!g[i].is_zero()) v[i] -= mul_term_left(c, m, g[i]);
}

/// Top-reduces the module element until its lead is irreducible.
void top_reduce(Vec& v, const std::vector<Vec>& basis, const std::vector<Lead>& leads) {
  for (;;) {
    Lead l = lead_of(v);
    if (l.comp < 0) return;
    bool hit = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (leads[k].comp != l.comp || !leads[k].m.divides(l.m)) continue;
      axpy_vec(v, l.c / leads[k].c, l.m / leads[k].m, basis[k]);
      hit = true;
      break;
    }
    if (!hit) return;
  }
}

}  // namespace

std::vector<std::vector<NcPoly>> syzygy_module(const std::vector<NcPoly>& f) {
  if (f.empty()) return {};
  const AlgebraPtr& src = f.front().algebra();
  const int n = src->nvars();
  std::uint32_t supp = 0;
  for (const auto& p : f) {
    require_same_context(f.front(), p);
    supp |= p.support();
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((supp >> i & 1u) && (supp >> j & 1u) && !src->commute(i, j))
        throw NoncommutativeSupport("syzygy_module: inputs must be commutative");
  // Compute in the commutative polynomial ring on the same generator names.
  std::vector<VarInfo> vars;
  for (int i = 0; i < n; ++i) vars.push_back(src->var(i));
  auto R = Algebra::create(vars, {}, MonOrdering::degrevlex(n));
  const std::size_t m = f.size();
  std::vector<Vec> basis;
  std::vector<Lead> leads;
  struct P {
    std::size_t i, j;
    int deg;
  };
  std::vector<P> pairs;
  auto insert = [&](Vec v) {
    Lead l = lead_of(v);
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i)
      if (leads[i].comp == l.comp) {
        Mono lc = Mono::lcm(leads[i].m, l.m);
        pairs.push_back({i, k, lc.total_degree()});
      }
    basis.push_back(std::move(v));
    leads.push_back(l);
  };
  for (std::size_t i = 0; i < m; ++i) {
    Vec v(m + 1, NcPoly(R));
    v[0] = f[i].transfer(R);
    v[i + 1] = NcPoly::constant(R, 1);
    top_reduce(v, basis, leads);
    if (lead_of(v).comp >= 0) insert(std::move(v));
  }
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const P& a, const P& b) { return a.deg < b.deg; });
    P p = *it;
    pairs.erase(it);
    const Lead &a = leads[p.i], &b = leads[p.j];
    Mono l = Mono::lcm(a.m, b.m);
    Vec s(m + 1, NcPoly(R));
    axpy_vec(s, Rational(-1) / a.c, l / a.m, basis[p.i]);
    axpy_vec(s, Rational(1) / b.c, l / b.m, basis[p.j]);
    top_reduce(s, basis, leads);
    if (lead_of(s).comp >= 0) insert(std::move(s));
  }
  std::vector<std::vector<NcPoly>> out;
  for (const auto& v : basis) {
    if (!v[0].is_zero()) continue;
    std::vector<NcPoly> a(m);
    // Joint content over all components.
    std::vector<Rational> cs;
    for (std::size_t i = 1; i <= m; ++i)
      for (const auto& t : v[i].terms()) cs.push_back(t.c);
    Integer den = common_denominator(cs);
    for (auto& c : cs) c *= den;
    Integer g = numerator_gcd(cs);
    Rational k = Rational(den) / Rational(g);
    for (std::size_t i = 1; i <= m; ++i) a[i - 1] = (v[i] * k).transfer(src);
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace bfun
