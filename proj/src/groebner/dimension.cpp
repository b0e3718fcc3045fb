#include <functional>

#include "bfun/errors.hpp"
#include "bfun/groebner.hpp"

namespace bfun {

namespace {

bool in_leading_ideal(const std::vector<Mono>& lms, const Mono& m) {
  for (const auto& l : lms)
    if (l.divides(m)) return true;
  return false;
}

}  // namespace

VDim vdim(const GroebnerBasis& g) {
  const int n = g.algebra()->nvars();
  auto lms = g.leading();
  if (in_leading_ideal(lms, Mono{})) return {true, 0};
  for (int v = 0; v < n; ++v) {
    bool pure = false;
    for (const auto& l : lms)
      if (l.support() == (1u << v)) pure = true;
    if (!pure) return {false, 0};
  }
  // Standard monomials form an order ideal: DFS with nondecreasing
  // variable index visits each exactly once.
  std::uint64_t count = 0;
  std::function<void(const Mono&, int)> visit = [&](const Mono& m, int start) {
    ++count;
    for (int v = start; v < n; ++v) {
      Mono next = m;
      next[v] = static_cast<std::uint16_t>(next[v] + 1);
      if (!in_leading_ideal(lms, next)) visit(next, v);
    }
  };
  visit(Mono{}, 0);
  return {true, count};
}

int monomial_dimension(const std::vector<Mono>& lms, int nvars) {
  std::vector<std::uint32_t> supp;
  for (const auto& l : lms) {
    if (l.is_one()) return -1;
    supp.push_back(l.support());
  }
  int best = 0;
  std::function<void(int, std::uint32_t, int)> grow = [&](int v, std::uint32_t set, int size) {
    if (size + (nvars - v) <= best) return;
    if (v == nvars) {
      best = size;
      return;
    }
    std::uint32_t with = set | (1u << v);
    bool ok = true;
    for (auto s : supp)
      if ((s & ~with) == 0) {
        ok = false;
        break;
      }
    if (ok) grow(v + 1, with, size + 1);
    grow(v + 1, set, size);
  };
  grow(0, 0, 0);
  return best;
}

namespace {

bool degree_compatible(const MonOrdering& o) {
  const auto& st = o.stages();
  if (st.empty() || st.front().type != MonOrdering::Stage::Type::Weight) return false;
  for (int i = 0; i < o.nvars(); ++i)
    if (st.front().w[static_cast<std::size_t>(i)] <= 0) return false;
  return true;
}

}  // namespace

int gk_dimension(const GroebnerBasis& g) {
  if (!degree_compatible(g.algebra()->ordering())) return gk_dimension(g.algebra(), g.elements());
  return monomial_dimension(g.leading(), g.algebra()->nvars());
}

int gk_dimension(const AlgebraPtr& a, const std::vector<NcPoly>& gens) {
  AlgebraPtr b = a;
  if (!degree_compatible(a->ordering())) {
    auto cand = a->with_ordering(MonOrdering::degrevlex(a->nvars()));
    if (validate_presentation(*cand).ok) b = cand;
  }
  auto g = buchberger(b, gens);
  return monomial_dimension(g.leading(), b->nvars());
}

bool is_holonomic(const AlgebraPtr& a, const std::vector<NcPoly>& gens) {
  const int n = static_cast<int>(a->vars_with_role(VarRole::X).size() + a->vars_with_role(VarRole::T).size());
  if (2 * n != a->nvars()) throw InvalidArgument("is_holonomic expects a Weyl algebra");
  int d = gk_dimension(a, gens);
  return d == n;
}

}  // namespace bfun
