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

VarBfctResult finish(UniPoly bf, const std::vector<NcPoly>& f, const VarOptions& opt) {
  VarBfctResult out;
  out.b_f = bf.monic();
  out.codim = opt.codim ? *opt.codim : codim(f);
  out.b_z = out.b_f.compose_linear(1, Rational(1 - out.codim));
  out.factors = rational_roots(out.b_z);
  return out;
}

}  // namespace

int codim(const std::vector<NcPoly>& f) {
  if (f.empty()) throw InvalidArgument("empty polynomial tuple");
  const AlgebraPtr& R = f.front().algebra();
  if (!R->is_commutative()) throw NoncommutativeSupport("codim expects commutative polynomials");
  auto G = buchberger(R, f);
  if (G.is_unit()) throw UnitIdeal("the polynomials generate the whole ring");
  return R->nvars() - gk_dimension(G);
}

MonOrdering var_ann_ordering(const Algebra& a, VarOrdering kind) {
  const int n = a.nvars();
  const auto dt = a.vars_with_role(VarRole::Dt);
  const int r = static_cast<int>(dt.size());
  std::vector<Rational> r1(static_cast<std::size_t>(n), Rational(0)), r2 = r1;
  std::vector<int> dts(static_cast<std::size_t>(r)), ss;
  for (int v : dt) {
    r1[static_cast<std::size_t>(v)] = 1;
    dts[static_cast<std::size_t>(a.var(v).i)] = v;
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      auto v = a.find_role(VarRole::Sij, i, j);
      if (!v) throw InvalidArgument("algebra lacks s_ij generators");
      r2[static_cast<std::size_t>(*v)] = i == j ? 2 : 1;
      ss.push_back(*v);
    }
  if (kind == VarOrdering::Weighted) return MonOrdering::matrix(n, {r1, r2}, MonOrdering::degrevlex(n));
  std::vector<int> block = dts, rest;
  block.insert(block.end(), ss.begin(), ss.end());
  for (VarRole role : {VarRole::X, VarRole::Dx}) {
    auto vs = a.vars_with_role(role);
    std::vector<int> ordered(vs.size());
    for (int v : vs) ordered[static_cast<std::size_t>(a.var(v).i)] = v;
    rest.insert(rest.end(), ordered.begin(), ordered.end());
  }
  std::vector<MonOrdering::Stage> st{MonOrdering::weight_stage(n, r1), MonOrdering::weight_stage(n, r2)};
  for (auto& s : MonOrdering::dp_stages(n, block)) st.push_back(std::move(s));
  for (auto& s : MonOrdering::rp_stages(rest)) st.push_back(std::move(s));
  std::string a1 = "a(", a2 = "a(";
  for (int i = 0; i < r; ++i) a1 += std::string(i ? "," : "") + "1";
  for (int i = 0; i < r; ++i) a2 += std::string(i ? "," : "") + "0";
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a2 += i == j ? ",2" : ",1";
  const std::string label = "(" + a1 + ")," + a2 + "),(dp(" + std::to_string(block.size()) + "),rp))";
  return MonOrdering(n, MonOrdering::Kind::Matrix, std::move(st), label);
}

AnnResult sannfs_var(const std::vector<NcPoly>& f, const VarOptions& opt) {
  if (f.empty()) throw InvalidArgument("empty polynomial tuple");
  for (const auto& p : f)
    if (p.is_zero()) throw InvalidArgument("input must be nonzero");
  DIdeal I = var_ann_ideal(f);
  const AlgebraPtr& A = I.algebra;
  const MonOrdering ord = opt.ann.ordering ? *opt.ann.ordering : var_ann_ordering(*A, opt.ordering);
  auto er = eliminate(I.gens, ord, A->vars_with_role(VarRole::Dt), opt.ann.gb);
  auto target = make_gl_weyl_algebra(x_names_of(*A), static_cast<int>(f.size()));
  auto map = role_map(*A, *target);
  auto ctx = target->with_ordering(er.gb.algebra()->ordering().restricted(map, target->nvars()));
  require_valid_presentation(*ctx);
  std::vector<NcPoly> kept;
  for (const auto& k : er.kept) kept.push_back(map_roles(k, ctx));
  return {target, make_reduced(ctx, std::move(kept), er.gb.complete())};
}

VarBfctResult bfct_var_ann(const std::vector<NcPoly>& f, const VarOptions& opt) {
  AnnResult ann = sannfs_var(f, opt);
  const AlgebraPtr& ctx = ann.gb.algebra();
  std::vector<NcPoly> gens = ann.generators();
  for (const auto& p : f) gens.push_back(embed_x(p, ctx));
  auto J = buchberger(ctx, gens, opt.gb);
  NcPoly sigma(ctx);
  for (int i = 0; i < static_cast<int>(f.size()); ++i)
    sigma += NcPoly::variable(ctx, *ctx->find_role(VarRole::Sij, i, i));
  return finish(principal_intersect(sigma, J, opt.intersect), f, opt);
}

VarBfctResult bfct_var(const std::vector<NcPoly>& f, const VarOptions& opt) {
  if (f.empty()) throw InvalidArgument("empty polynomial tuple");
  for (const auto& p : f)
    if (p.is_zero()) throw InvalidArgument("input must be nonzero");
  DIdeal I = malgrange_ideal(f);
  const AlgebraPtr& A = I.algebra;
  const int r = static_cast<int>(f.size());
  const int n = static_cast<int>(A->vars_with_role(VarRole::X).size());
  std::vector<Rational> w(static_cast<std::size_t>(r + n), Rational(0));
  for (int i = 0; i < r; ++i) w[static_cast<std::size_t>(i)] = 1;
  InitialIdealOptions io;
  io.gb = opt.gb;
  std::vector<std::int64_t> u = opt.uhat;
  if (u.empty()) u = quasi_homogeneous_weights(f);
  auto G = initial_ideal(I, vfiltration_weights(*A, w), noro_weights(*A, f, u), io);
  NcPoly s(A);
  for (int i = 0; i < r; ++i)
    s -= NcPoly::variable(A, *A->find_role(VarRole::Dt, i)) * NcPoly::variable(A, *A->find_role(VarRole::T, i));
  return finish(principal_intersect(s, G, opt.intersect), f, opt);
}

}  // namespace bfun
