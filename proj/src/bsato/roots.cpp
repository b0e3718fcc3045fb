#include <algorithm>

#include "bfun/bsato.hpp"
#include "bfun/errors.hpp"

namespace bfun {

namespace {

UniPoly derivative(const UniPoly& p) {
  std::vector<Rational> c;
  for (int i = 1; i <= p.degree(); ++i) c.push_back(p.coeff(i) * i);
  return UniPoly(std::move(c));
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Rational with the smallest denominator in [a, b], a <= b.
Rational simplest(const Rational& a, const Rational& b) {
  if (a <= 0 && b >= 0) return 0;
  if (b < 0) return -simplest(-b, -a);
  Integer c = ceil_q(a);
  if (Rational(c) <= b) return Rational(c);
  Integer f = floor_q(a);
  Rational fa = a - Rational(f), fb = b - Rational(f);
  return Rational(f) + 1 / simplest(1 / fb, 1 / fa);
}

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq{p, derivative(p)};
  while (seq.back().degree() > 0) {
    auto r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    // keep sign, shrink size
    Rational l = abs(r.lc());
    seq.push_back(r * Rational(-1 / l));
  }
  return seq;
}

int variations(const std::vector<UniPoly>& seq, const Rational& x) {
  int v = 0, last = 0;
  for (const auto& q : seq) {
    int s = sign(q.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Rational cauchy_bound(const UniPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.lc())));
  return m + 1;
}

// Integer polynomial content-free form's leading coefficient.
Integer integer_lc(const UniPoly& p) {
  Integer den = common_denominator(p.coeffs());
  std::vector<Integer> c;
  Integer g = 0;
  for (const auto& x : p.coeffs()) {
    Integer v = Rational(x * Rational(den)).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    c.push_back(v);
  }
  Integer l = c.back() / g;
  return abs(l);
}

// The rational root (if any) of the square-free p in (lo, hi], where p has
// exactly one root.
std::optional<Rational> rational_in(const UniPoly& p, Rational lo, Rational hi, const Rational& limit) {
  if (p.eval(hi) == 0) return hi;
  int slo = sign(p.eval(lo));
  if (slo == 0) slo = sign(derivative(p).eval(lo));
  while (true) {
    Rational c = simplest(lo, hi);
    if (c != lo && p.eval(c) == 0) return c;
    if (hi - lo < limit) return std::nullopt;
    Rational mid = (lo + hi) / 2;
    int sm = sign(p.eval(mid));
    if (sm == 0) return mid;
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
}

void isolate(const UniPoly& p, const std::vector<UniPoly>& seq, const Rational& lo, const Rational& hi, int vlo,
             int vhi, const Rational& limit, std::vector<Rational>& out) {
  const int n = vlo - vhi;
  if (n == 0) return;
  if (n == 1) {
    if (auto r = rational_in(p, lo, hi, limit)) out.push_back(*r);
    return;
  }
  Rational mid = (lo + hi) / 2;
  int vm = variations(seq, mid);
  isolate(p, seq, lo, mid, vlo, vm, limit, out);
  isolate(p, seq, mid, hi, vm, vhi, limit, out);
}

}  // namespace

BFactorization rational_roots(const UniPoly& b) {
  if (b.is_zero()) throw InvalidArgument("rational_roots of the zero polynomial");
  BFactorization out;
  UniPoly rest = b;
  if (b.degree() >= 1) {
    UniPoly sq = rest.divmod(gcd(rest, derivative(rest))).first.monic();
    std::vector<Rational> cand;
    if (sq.degree() >= 1) {
      auto seq = sturm_sequence(sq);
      Rational B = cauchy_bound(sq);
      Integer L = integer_lc(sq);
      Rational limit = Rational(1) / (Rational(L) * Rational(L) * 4);
      Rational lo = -B - 1;
      isolate(sq, seq, lo, B, variations(seq, lo), variations(seq, B), limit, cand);
    }
    for (const auto& r : cand) {
      int m = 0;
      UniPoly lin = UniPoly::linear_root(r);
      while (rest.degree() >= 1) {
        auto [q, rem] = rest.divmod(lin);
        if (!rem.is_zero()) break;
        rest = std::move(q);
        ++m;
      }
      if (m > 0) out.roots.emplace_back(r, m);
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  out.residual = rest;
  return out;
}

std::string BFactorization::to_string(const std::string& var) const {
  std::string s;
  for (const auto& [r, m] : roots) {
    if (!s.empty()) s += "*";
    if (r == 0)
      s += var;
    else
      s += "(" + UniPoly::linear_root(r).to_string(var) + ")";
    if (m > 1) s += "^" + std::to_string(m);
  }
  if (!(residual == UniPoly::constant(1))) {
    if (!s.empty()) s += "*";
    s += "(" + residual.to_string(var) + ")";
  }
  return s.empty() ? "1" : s;
}

}  // namespace bfun
