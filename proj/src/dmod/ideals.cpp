#include "bfun/dmod.hpp"
#include "bfun/errors.hpp"

namespace bfun {

namespace {

int x_index(const VarInfo& v, int pos) {
  if (v.role == VarRole::X) return v.i;
  if (v.role == VarRole::Plain) return pos;
  throw InvalidArgument("expected a commutative polynomial in x, got generator " + v.name);
}

std::vector<std::string> x_names(const std::vector<NcPoly>& f) {
  if (f.empty()) throw InvalidArgument("empty polynomial tuple");
  const Algebra& a = f.front().alg();
  std::vector<std::string> names;
  for (int v = 0; v < a.nvars(); ++v) {
    const auto& info = a.var(v);
    if (info.role == VarRole::X || info.role == VarRole::Plain) names.push_back(info.name);
  }
  for (const auto& p : f)
    if (!p.alg().same_presentation(a)) throw AlgebraMismatch("tuple entries must share a ring");
  if (names.empty()) throw InvalidArgument("ring has no x generators");
  return names;
}

struct Embedded {
  AlgebraPtr a;
  std::vector<NcPoly> f;
  std::vector<std::vector<NcPoly>> df;  // df[m][j]
  int n = 0;
};

Embedded embed_all(const std::vector<NcPoly>& f, const AlgebraPtr& a) {
  Embedded e;
  e.a = a;
  const int n = static_cast<int>(a->vars_with_role(VarRole::X).size());
  e.n = n;
  for (const auto& p : f) {
    if (p.is_zero()) throw InvalidArgument("polynomials in the tuple must be nonzero");
    e.f.push_back(embed_x(p, a));
  }
  e.df.resize(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    int xv = *a->find_role(VarRole::X, m);
    for (const auto& p : e.f) e.df[static_cast<std::size_t>(m)].push_back(partial(p, xv));
  }
  return e;
}

}  // namespace

NcPoly embed_x(const NcPoly& f, const AlgebraPtr& a) {
  const Algebra& src = f.alg();
  std::vector<int> map(static_cast<std::size_t>(src.nvars()), -1);
  for (int v = 0; v < src.nvars(); ++v) {
    int i = x_index(src.var(v), v);
    auto t = a->find_role(VarRole::X, i);
    if (t) map[static_cast<std::size_t>(v)] = *t;
  }
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Mono m;
    for (int v = 0; v < src.nvars(); ++v) {
      if (!t.m[v]) continue;
      if (map[static_cast<std::size_t>(v)] < 0)
        throw InvalidArgument("generator " + src.name(v) + " has no counterpart in the target algebra");
      m[map[static_cast<std::size_t>(v)]] = t.m[v];
    }
    out.push_back({t.c, m});
  }
  return NcPoly::from_terms(a, std::move(out));
}

std::vector<int> role_map(const Algebra& from, const Algebra& to) {
  std::vector<int> map(static_cast<std::size_t>(from.nvars()), -1);
  for (int v = 0; v < from.nvars(); ++v) {
    const auto& info = from.var(v);
    std::optional<int> t = info.role == VarRole::Plain ? to.find(info.name) : to.find_role(info.role, info.i, info.j);
    if (t) map[static_cast<std::size_t>(v)] = *t;
  }
  return map;
}

NcPoly map_roles(const NcPoly& p, const AlgebraPtr& target) {
  const Algebra& src = p.alg();
  auto map = role_map(src, *target);
  const std::uint32_t used = [&] {
    std::uint32_t u = 0;
    for (const auto& t : p.terms()) u |= t.m.support();
    return u;
  }();
  for (int v = 0; v < src.nvars(); ++v) {
    if (!(used >> v & 1u)) continue;
    if (map[static_cast<std::size_t>(v)] < 0)
      throw InvalidArgument("generator " + src.name(v) + " has no counterpart in the target algebra");
    for (int u = 0; u < v; ++u)
      if ((used >> u & 1u) && !src.commute(u, v) && map[static_cast<std::size_t>(u)] > map[static_cast<std::size_t>(v)])
        throw InvalidArgument("map_roles would reorder non-commuting generators");
  }
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Mono m;
    for (int v = 0; v < src.nvars(); ++v)
      if (t.m[v]) m[map[static_cast<std::size_t>(v)]] = t.m[v];
    out.push_back({t.c, m});
  }
  return NcPoly::from_terms(target, std::move(out));
}

DIdeal malgrange_ideal(const std::vector<NcPoly>& f) {
  const int r = static_cast<int>(f.size());
  auto A = make_malgrange_algebra(x_names(f), r);
  auto e = embed_all(f, A);
  DIdeal I{A, {}};
  for (int j = 0; j < r; ++j)
    I.gens.push_back(NcPoly::variable(A, *A->find_role(VarRole::T, j)) - e.f[static_cast<std::size_t>(j)]);
  for (int m = 0; m < e.n; ++m) {
    NcPoly g = NcPoly::variable(A, *A->find_role(VarRole::Dx, m));
    for (int j = 0; j < r; ++j)
      g += e.df[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] *
           NcPoly::variable(A, *A->find_role(VarRole::Dt, j));
    I.gens.push_back(g);
  }
  return I;
}

DIdeal bm_ideal(const std::vector<NcPoly>& f) {
  const int p = static_cast<int>(f.size());
  auto A = make_bm_algebra(x_names(f), p);
  auto e = embed_all(f, A);
  DIdeal I{A, {}};
  for (int j = 0; j < p; ++j)
    I.gens.push_back(NcPoly::variable(A, *A->find_role(VarRole::S, j)) +
                     e.f[static_cast<std::size_t>(j)] * NcPoly::variable(A, *A->find_role(VarRole::Dt, j)));
  for (int m = 0; m < e.n; ++m) {
    NcPoly g = NcPoly::variable(A, *A->find_role(VarRole::Dx, m));
    for (int j = 0; j < p; ++j)
      g += e.df[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] *
           NcPoly::variable(A, *A->find_role(VarRole::Dt, j));
    I.gens.push_back(g);
  }
  return I;
}

DIdeal var_ann_ideal(const std::vector<NcPoly>& f) {
  const int r = static_cast<int>(f.size());
  auto A = make_var_ann_algebra(x_names(f), r);
  auto e = embed_all(f, A);
  DIdeal I{A, {}};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      I.gens.push_back(NcPoly::variable(A, *A->find_role(VarRole::Sij, i, j)) +
                       NcPoly::variable(A, *A->find_role(VarRole::Dt, i)) * e.f[static_cast<std::size_t>(j)]);
  for (int m = 0; m < e.n; ++m) {
    NcPoly g = NcPoly::variable(A, *A->find_role(VarRole::Dx, m));
    for (int k = 0; k < r; ++k)
      g += e.df[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] *
           NcPoly::variable(A, *A->find_role(VarRole::Dt, k));
    I.gens.push_back(g);
  }
  return I;
}

GroebnerBasis initial_ideal(const DIdeal& I, const std::vector<Rational>& w, const std::vector<std::int64_t>& hw,
                            const InitialIdealOptions& opt) {
  const AlgebraPtr& A = I.algebra;
  const int n = A->nvars();
  if (static_cast<int>(w.size()) != n) throw InvalidArgument("initial_ideal: one weight per generator expected");
  bool nonzero = false;
  for (const auto& x : w) nonzero = nonzero || x != 0;
  if (!nonzero) throw InvalidArgument("initial_ideal: weight vector must be nonzero");
  MonOrdering base = opt.base ? *opt.base : MonOrdering::degrevlex(n);
  auto Abase = A->with_ordering(base);
  require_valid_presentation(*Abase);
  if (opt.check_holonomic && !is_holonomic(A, I.gens)) throw NotHolonomic("D/I is not holonomic");
  auto vord = MonOrdering::matrix(n, {w}, base);
  auto H = make_homogenized(A, hw, vord);
  std::vector<NcPoly> hg;
  for (const auto& g : I.gens) {
    if (g.is_zero()) continue;
    if (!g.alg().same_presentation(*A)) throw AlgebraMismatch("initial_ideal: generator outside the ideal's algebra");
    hg.push_back(homogenize(g, H, hw));
  }
  if (hg.empty()) return GroebnerBasis(Abase, {}, true, true);
  auto G = buchberger(H, hg, opt.gb);
  std::vector<Rational> wh = w;
  wh.push_back(0);
  std::vector<NcPoly> forms;
  for (const auto& g : G.elements()) forms.push_back(dehomogenize(initial_form(g, wh), Abase));
  return make_reduced(Abase, std::move(forms), G.complete());
}

}  // namespace bfun
