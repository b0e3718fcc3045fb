#include "bfun/bsato.hpp"
#include "bfun/errors.hpp"

namespace bfun {

namespace {

std::vector<std::string> x_names_of(const Algebra& a) {
  auto xs = a.vars_with_role(VarRole::X);
  std::vector<std::string> out(xs.size());
  for (int v : xs) out[static_cast<std::size_t>(a.var(v).i)] = a.name(v);
  return out;
}

AnnResult finish(const EliminationResult& er, const AlgebraPtr& ambient, const AlgebraPtr& target) {
  auto map = role_map(*ambient, *target);
  auto ord = er.gb.algebra()->ordering().restricted(map, target->nvars());
  auto ctx = target->with_ordering(ord);
  require_valid_presentation(*ctx);
  std::vector<NcPoly> mapped;
  for (const auto& k : er.kept) mapped.push_back(map_roles(k, ctx));
  return {target, make_reduced(ctx, std::move(mapped), er.gb.complete())};
}

MonOrdering dt_block_ordering(const Algebra& a) {
  return MonOrdering::elimination(a.nvars(), a.vars_with_role(VarRole::Dt));
}

void require_nonzero(const std::vector<NcPoly>& f) {
  if (f.empty()) throw InvalidArgument("empty polynomial tuple");
  for (const auto& p : f)
    if (p.is_zero()) throw InvalidArgument("input must be nonzero");
}

}  // namespace

AnnResult annfs_bm_multi(const std::vector<NcPoly>& f, const AnnOptions& opt) {
  require_nonzero(f);
  DIdeal I = bm_ideal(f);
  const MonOrdering ord = opt.ordering ? *opt.ordering : dt_block_ordering(*I.algebra);
  auto er = eliminate(I.gens, ord, I.algebra->vars_with_role(VarRole::Dt), opt.gb);
  auto target = make_weyl_s(x_names_of(*I.algebra), static_cast<int>(f.size()));
  return finish(er, I.algebra, target);
}

AnnResult annfs_bm(const NcPoly& f, const AnnOptions& opt) { return annfs_bm_multi({f}, opt); }

AnnResult annfs_syz(const NcPoly& f, const AnnOptions& opt) {
  require_nonzero({f});
  if (f.is_constant()) return annfs_bm(f, opt);
  DIdeal I = bm_ideal({f});
  const AlgebraPtr& B = I.algebra;
  auto target = make_weyl_s(x_names_of(*B), 1);

  // T_f = (f, df/dx_1, ..), in the ring of f
  const Algebra& R = f.alg();
  std::vector<NcPoly> T{f};
  std::vector<int> xidx;
  for (int v = 0; v < R.nvars(); ++v) {
    T.push_back(partial(f, v));
    xidx.push_back(R.var(v).role == VarRole::X ? R.var(v).i : v);
  }
  auto syz = syzygy_module(T);
  const NcPoly s = NcPoly::variable(target, *target->find_role(VarRole::S, 0));
  std::vector<NcPoly> sa;
  for (const auto& a : syz) {
    NcPoly g = embed_x(a[0], target) * s;
    for (std::size_t i = 1; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      g += embed_x(a[i], target) * NcPoly::variable(target, *target->find_role(VarRole::Dx, xidx[i - 1]));
    }
    if (!g.is_zero()) sa.push_back(g);
  }
  std::vector<NcPoly> gens = I.gens;
  if (!sa.empty()) {
    auto sgb = buchberger(target, sa, opt.gb);
    for (const auto& g : sgb.elements()) gens.push_back(map_roles(g, B));
  }
  const MonOrdering ord = opt.ordering ? *opt.ordering : dt_block_ordering(*B);
  auto er = eliminate(gens, ord, B->vars_with_role(VarRole::Dt), opt.gb);
  return finish(er, B, target);
}

DIdeal bm_extended_basis(const std::vector<NcPoly>& f) {
  require_nonzero(f);
  DIdeal bm = bm_ideal(f);
  const int p = static_cast<int>(f.size());
  auto xs = x_names_of(*bm.algebra);
  const int n = static_cast<int>(xs.size());
  std::vector<VarInfo> vars;
  for (int j = 0; j < p; ++j) vars.push_back({t_name(j, p), VarRole::T, j});
  for (int i = 0; i < n; ++i) vars.push_back({xs[static_cast<std::size_t>(i)], VarRole::X, i});
  for (int i = 0; i < n; ++i) vars.push_back({"D" + xs[static_cast<std::size_t>(i)], VarRole::Dx, i});
  for (int j = 0; j < p; ++j) vars.push_back({shift_name(j, p), VarRole::Dt, j});
  for (int j = 0; j < p; ++j) vars.push_back({s_name(j, p), VarRole::S, j});
  const int nv = static_cast<int>(vars.size());
  const int x0 = p, dx0 = p + n, dt0 = p + 2 * n, s0 = p + 2 * n + p;
  std::vector<Relation> rel;
  for (int i = 0; i < n; ++i) rel.push_back({x0 + i, dx0 + i, {{Integer(1), Mono{}}}});
  for (int j = 0; j < p; ++j) {
    rel.push_back({j, dt0 + j, {{Integer(1), Mono{}}}});             // Dt t = t Dt + 1
    rel.push_back({j, s0 + j, {{Integer(-1), Mono::var(j)}}});       // s t = t s - t
    rel.push_back({dt0 + j, s0 + j, {{Integer(1), Mono::var(dt0 + j)}}});  // s Dt = Dt s + Dt
  }
  std::vector<Rational> r1(static_cast<std::size_t>(nv), Rational(0)), r2 = r1;
  for (int j = 0; j < p; ++j) r1[static_cast<std::size_t>(j)] = 1;
  for (int i = 0; i < n; ++i) r2[static_cast<std::size_t>(dx0 + i)] = 1;
  for (int j = 0; j < p; ++j) r2[static_cast<std::size_t>(s0 + j)] = 1;
  auto E = Algebra::create(std::move(vars), std::move(rel), MonOrdering::matrix(nv, {r1, r2}, MonOrdering::degrevlex(nv)));
  require_valid_presentation(*E);
  DIdeal out{E, {}};
  for (int j = 0; j < p; ++j) out.gens.push_back(NcPoly::variable(E, j) - embed_x(f[static_cast<std::size_t>(j)], E));
  for (const auto& g : bm.gens) out.gens.push_back(map_roles(g, E));
  return out;
}

IntersectUpToResult bs_ideal(const std::vector<NcPoly>& f, int k, bool principal, const AnnOptions& opt) {
  auto ann = annfs_bm_multi(f, opt);
  const AlgebraPtr& ctx = ann.gb.algebra();
  std::vector<NcPoly> gens = ann.generators();
  NcPoly prod = NcPoly::constant(ctx, 1);
  for (const auto& p : f) prod = prod * embed_x(p, ctx);
  gens.push_back(prod);
  auto J = buchberger(ctx, gens, opt.gb);
  std::vector<NcPoly> s;
  std::vector<std::string> names;
  for (int j = 0; j < static_cast<int>(f.size()); ++j) {
    int v = *ctx->find_role(VarRole::S, j);
    s.push_back(NcPoly::variable(ctx, v));
    names.push_back(ctx->name(v));
  }
  IntersectUpToOptions io;
  io.principal = principal;
  io.names = names;
  io.parallel = opt.gb.parallel;
  return intersect_up_to(s, J, k, io);
}

}  // namespace bfun
