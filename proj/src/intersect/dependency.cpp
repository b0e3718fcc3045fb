#include <algorithm>

#include "bfun/intersect.hpp"

namespace bfun {

namespace {

using Sparse = std::vector<std::pair<int, Integer>>;

// a*x - b*y
Sparse combine(const Integer& a, const Sparse& x, const Integer& b, const Sparse& y) {
  Sparse out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      Integer v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void combine_comb(DependencyBasis::Combination& x, const Integer& a, const DependencyBasis::Combination& y,
                  const Integer& b) {
  if (y.size() > x.size()) x.resize(y.size(), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] *= Rational(a);
    if (i < y.size() && y[i] != 0) x[i] -= Rational(b) * y[i];
  }
}

void primitive(Sparse& v, DependencyBasis::Combination& comb) {
  Integer g = 0;
  for (const auto& [c, x] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (v.front().second < 0) g = -g;
  if (g == 1) return;
  for (auto& [c, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  for (auto& q : comb) q /= Rational(g);
}

const Integer* entry(const Sparse& v, int col) {
  auto it = std::lower_bound(v.begin(), v.end(), col, [](const auto& e, int c) { return e.first < c; });
  return it != v.end() && it->first == col ? &it->second : nullptr;
}

}  // namespace

int DependencyBasis::column(const Mono& m) {
  auto [it, fresh] = cols_.try_emplace(m, static_cast<int>(cols_.size()));
  return it->second;
}

std::optional<DependencyBasis::Combination> DependencyBasis::add(const detail::IPoly& v, Combination comb) {
  Sparse u;
  u.reserve(v.size());
  for (const auto& t : v)
    if (t.c != 0) u.emplace_back(column(t.m), t.c);
  std::sort(u.begin(), u.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::size_t pos = 0;
  while (pos < u.size()) {
    auto pr = pivot_row_.find(u[pos].first);
    if (pr == pivot_row_.end()) {
      ++pos;
      continue;
    }
    const Row& r = rows_[pr->second];
    Integer a = r.v.front().second, b = u[pos].second, g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    u = combine(a, u, b, r.v);
    combine_comb(comb, a, r.comb, b);
  }
  if (u.empty()) return comb;

  primitive(u, comb);
  const int p = u.front().first;
  for (auto& r : rows_) {
    const Integer* e = entry(r.v, p);
    if (!e) continue;
    Integer a = u.front().second, b = *e, g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    r.v = combine(a, r.v, b, u);
    combine_comb(r.comb, a, comb, b);
    primitive(r.v, r.comb);
  }
  pivot_row_[p] = rows_.size();
  rows_.push_back({std::move(u), std::move(comb)});
  return std::nullopt;
}

bool DependencyBasis::consistent() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].v.empty()) return false;
    const int p = rows_[i].v.front().first;
    auto it = pivot_row_.find(p);
    if (it == pivot_row_.end() || it->second != i) return false;
    for (std::size_t j = 0; j < rows_.size(); ++j)
      if (j != i && entry(rows_[j].v, p)) return false;
  }
  return pivot_row_.size() == rows_.size();
}

}  // namespace bfun
