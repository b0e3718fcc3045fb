#include <algorithm>

#include "bfun/dmod.hpp"
#include "bfun/errors.hpp"

namespace bfun {

std::int64_t weighted_degree(const Mono& m, const std::vector<std::int64_t>& wt) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < wt.size(); ++i) d += wt[i] * m[static_cast<int>(i)];
  return d;
}

Rational weighted_degree(const Mono& m, const std::vector<Rational>& wt) {
  Rational d = 0;
  for (std::size_t i = 0; i < wt.size(); ++i)
    if (m[static_cast<int>(i)]) d += wt[i] * m[static_cast<int>(i)];
  return d;
}

std::vector<Rational> vfiltration_weights(const Algebra& a, const std::vector<Rational>& w) {
  const int n = a.nvars();
  std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
  std::size_t k = 0;
  for (int v = 0; v < n; ++v) {
    const auto& info = a.var(v);
    if (info.role != VarRole::X && info.role != VarRole::T) continue;
    if (k >= w.size()) throw InvalidArgument("weight vector shorter than the number of x and t generators");
    const Rational& wk = w[k++];
    if (wk < 0) throw InvalidArgument("V-filtration weights must be non-negative");
    out[static_cast<std::size_t>(v)] = -wk;
    auto partner = a.find_role(info.role == VarRole::X ? VarRole::Dx : VarRole::Dt, info.i);
    if (!partner) throw InvalidArgument("generator " + info.name + " has no derivative partner");
    out[static_cast<std::size_t>(*partner)] = wk;
  }
  if (k != w.size()) throw InvalidArgument("weight vector longer than the number of x and t generators");
  return out;
}

NcPoly initial_form(const NcPoly& p, const std::vector<Rational>& wt) {
  if (p.is_zero()) return p;
  Rational best;
  bool first = true;
  std::vector<Rational> deg;
  deg.reserve(p.size());
  for (const auto& t : p.terms()) {
    deg.push_back(weighted_degree(t.m, wt));
    if (first || deg.back() > best) best = deg.back();
    first = false;
  }
  std::vector<Term> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (deg[i] == best) out.push_back(p.terms()[i]);
  return NcPoly::from_sorted(p.algebra(), std::move(out));
}

NcPoly homogenize(const NcPoly& p, const AlgebraPtr& h, const std::vector<std::int64_t>& wt) {
  const int n = static_cast<int>(wt.size());
  if (h->nvars() != n + 1) throw InvalidArgument("homogenize: target must have one extra generator");
  if (p.is_zero()) return NcPoly(h);
  std::int64_t top = 0;
  bool first = true;
  for (const auto& t : p.terms()) {
    for (int v = n; v < kMaxVars; ++v)
      if (t.m[v]) throw InvalidArgument("homogenize: polynomial already uses h");
    std::int64_t d = weighted_degree(t.m, wt);
    if (first || d > top) top = d;
    first = false;
  }
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Mono m = t.m;
    m[n] = static_cast<std::uint16_t>(top - weighted_degree(t.m, wt));
    out.push_back({t.c, m});
  }
  return NcPoly::from_terms(h, std::move(out));
}

NcPoly dehomogenize(const NcPoly& p, const AlgebraPtr& target) {
  const int n = target->nvars();
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Mono m = t.m;
    m[n] = 0;
    out.push_back({t.c, m});
  }
  return NcPoly::from_terms(target, std::move(out));
}

std::vector<std::int64_t> noro_weights(const Algebra& a, const NcPoly& f, const std::vector<std::int64_t>& uhat) {
  const int nx = static_cast<int>(a.vars_with_role(VarRole::X).size());
  std::vector<std::int64_t> u = uhat;
  if (u.empty()) u.assign(static_cast<std::size_t>(nx), 1);
  if (static_cast<int>(u.size()) != nx) throw InvalidArgument("û needs one weight per x generator");
  for (auto x : u)
    if (x <= 0) throw InvalidArgument("û must be positive");
  // deg_û f over the ring of f (generator i of f's ring is x_i)
  std::int64_t degf = 0;
  for (const auto& t : f.terms()) degf = std::max(degf, weighted_degree(t.m, u));
  std::vector<std::int64_t> out(static_cast<std::size_t>(a.nvars()), 1);
  for (int v = 0; v < a.nvars(); ++v) {
    const auto& info = a.var(v);
    const auto i = static_cast<std::size_t>(info.i);
    switch (info.role) {
      case VarRole::T: out[static_cast<std::size_t>(v)] = degf; break;
      case VarRole::X: out[static_cast<std::size_t>(v)] = u[i]; break;
      case VarRole::Dt: out[static_cast<std::size_t>(v)] = 1; break;
      case VarRole::Dx: out[static_cast<std::size_t>(v)] = degf - u[i] + 1; break;
      default: break;
    }
    if (out[static_cast<std::size_t>(v)] <= 0) throw InvalidArgument("Noro weights must be positive");
  }
  return out;
}

std::vector<std::int64_t> noro_weights(const Algebra& a, const std::vector<NcPoly>& f,
                                       const std::vector<std::int64_t>& uhat) {
  if (f.empty()) throw InvalidArgument("empty polynomial tuple");
  const int nx = static_cast<int>(a.vars_with_role(VarRole::X).size());
  std::vector<std::int64_t> u = uhat;
  if (u.empty()) u.assign(static_cast<std::size_t>(nx), 1);
  if (static_cast<int>(u.size()) != nx) throw InvalidArgument("û needs one weight per x generator");
  for (auto x : u)
    if (x <= 0) throw InvalidArgument("û must be positive");
  std::vector<std::int64_t> d;
  std::int64_t c = *std::max_element(u.begin(), u.end());
  for (const auto& p : f) {
    std::int64_t dk = 1;
    for (const auto& t : p.terms()) dk = std::max(dk, weighted_degree(t.m, u));
    d.push_back(dk);
    c = std::max(c, dk);
  }
  ++c;
  std::vector<std::int64_t> out(static_cast<std::size_t>(a.nvars()), 1);
  for (int v = 0; v < a.nvars(); ++v) {
    const auto& info = a.var(v);
    const auto i = static_cast<std::size_t>(info.i);
    switch (info.role) {
      case VarRole::T: out[static_cast<std::size_t>(v)] = d.at(i); break;
      case VarRole::X: out[static_cast<std::size_t>(v)] = u[i]; break;
      case VarRole::Dt: out[static_cast<std::size_t>(v)] = c - d.at(i); break;
      case VarRole::Dx: out[static_cast<std::size_t>(v)] = c - u[i]; break;
      default: break;
    }
  }
  return out;
}

std::vector<std::int64_t> quasi_homogeneous_weights(const std::vector<NcPoly>& f) {
  if (f.empty()) return {};
  const int n = f.front().alg().nvars();
  // rows: exponent differences between terms of the same f_k
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : f)
    for (std::size_t k = 1; k < p.terms().size(); ++k) {
      std::vector<Rational> r(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = int(p.terms()[k].m[i]) - int(p.terms()[0].m[i]);
      rows.push_back(std::move(r));
    }
  // reduced row echelon form
  std::vector<int> pivots;
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Rational lead = rows[rank][static_cast<std::size_t>(col)];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][static_cast<std::size_t>(col)] == 0) continue;
      const Rational m = rows[r][static_cast<std::size_t>(col)];
      for (int j = 0; j < n; ++j) rows[r][static_cast<std::size_t>(j)] -= m * rows[rank][static_cast<std::size_t>(j)];
    }
    pivots.push_back(col);
    ++rank;
  }
  if (static_cast<int>(rank) != n - 1) return {};
  int freecol = 0;
  while (std::find(pivots.begin(), pivots.end(), freecol) != pivots.end()) ++freecol;
  std::vector<Rational> w(static_cast<std::size_t>(n));
  w[static_cast<std::size_t>(freecol)] = 1;
  for (std::size_t r = 0; r < rank; ++r)
    w[static_cast<std::size_t>(pivots[r])] = -rows[r][static_cast<std::size_t>(freecol)];
  const bool neg = w[0] < 0;
  for (auto& x : w) {
    if (neg) x = -x;
    if (x <= 0) return {};
  }
  Integer den = common_denominator(w);
  std::vector<std::int64_t> out;
  Integer g = 0;
  for (const auto& x : w) {
    Integer v = Rational(x * Rational(den)).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  for (const auto& x : w) {
    Integer v = Rational(x * Rational(den)).get_num() / g;
    if (!v.fits_slong_p() || v > 1000) return {};
    out.push_back(v.get_si());
  }
  return out;
}

}  // namespace bfun
