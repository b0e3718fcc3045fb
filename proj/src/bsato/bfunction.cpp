#include "bfun/bsato.hpp"
#include "bfun/errors.hpp"

namespace bfun {

namespace {

BfctResult finish(UniPoly b) {
  b = b.monic();
  return {b, rational_roots(b)};
}

NcPoly var(const AlgebraPtr& a, VarRole r, int i) {
  auto v = a->find_role(r, i);
  if (!v) throw InvalidArgument("algebra lacks a required generator");
  return NcPoly::variable(a, *v);
}

}  // namespace

bool is_smooth(const NcPoly& f) {
  if (!f.alg().is_commutative()) throw NoncommutativeSupport("is_smooth expects a commutative polynomial");
  std::vector<NcPoly> gens{f};
  for (int v = 0; v < f.alg().nvars(); ++v) gens.push_back(partial(f, v));
  return buchberger(f.algebra(), gens).is_unit();
}

BfctResult bfct(const NcPoly& f, const std::vector<std::int64_t>& uhat, const BfctOptions& opt) {
  if (f.is_zero()) throw InvalidArgument("input must be nonzero");
  if (f.is_constant()) return finish(UniPoly::constant(1));
  DIdeal I = malgrange_ideal({f});
  const AlgebraPtr& A = I.algebra;
  const int n = static_cast<int>(A->vars_with_role(VarRole::X).size());
  std::vector<Rational> w(static_cast<std::size_t>(n + 1), Rational(0));
  w[0] = 1;
  InitialIdealOptions io;
  io.gb = opt.gb;
  auto G = initial_ideal(I, vfiltration_weights(*A, w), noro_weights(*A, f, uhat), io);
  NcPoly s = var(A, VarRole::T, 0) * var(A, VarRole::Dt, 0);
  UniPoly B = principal_intersect(s, G, opt.intersect);
  return finish(B.compose_linear(-1, -1));
}

BfctResult bfct_ann(const NcPoly& f, AnnMethod method, BfctVariant variant, const BfctOptions& opt) {
  if (f.is_zero()) throw InvalidArgument("input must be nonzero");
  if (f.is_constant()) return finish(UniPoly::constant(1));
  const UniPoly s_plus_1 = UniPoly::linear_root(-1);
  if (variant == BfctVariant::Alg2 && is_smooth(f)) return finish(s_plus_1);
  AnnResult ann = method == AnnMethod::BM ? annfs_bm(f, opt.ann) : annfs_syz(f, opt.ann);
  const AlgebraPtr& ctx = ann.gb.algebra();
  std::vector<NcPoly> gens = ann.generators();
  gens.push_back(embed_x(f, ctx));
  if (variant == BfctVariant::Alg2)
    for (int v = 0; v < f.alg().nvars(); ++v) {
      NcPoly d = partial(f, v);
      if (!d.is_zero()) gens.push_back(embed_x(d, ctx));
    }
  auto J = buchberger(ctx, gens, opt.gb);
  UniPoly B = principal_intersect(var(ctx, VarRole::S, 0), J, opt.intersect);
  return finish(variant == BfctVariant::Alg2 ? s_plus_1 * B : B);
}

BfctResult bfct_ideal(const DIdeal& I, const std::vector<Rational>& w, const BfctIdealOptions& opt) {
  const AlgebraPtr& A = I.algebra;
  bool nonzero = false;
  for (const auto& x : w) nonzero = nonzero || x != 0;
  if (!nonzero) throw InvalidArgument("weight vector must be nonzero");
  auto full = vfiltration_weights(*A, w);
  if (opt.check_holonomic && !is_holonomic(A, I.gens)) throw NotHolonomic("D/I is not holonomic");
  NcPoly s(A);
  std::size_t k = 0;
  for (int v = 0; v < A->nvars(); ++v) {
    const auto& info = A->var(v);
    if (info.role != VarRole::X && info.role != VarRole::T) continue;
    const Rational& wk = w[k++];
    if (wk == 0) continue;
    auto d = A->find_role(info.role == VarRole::X ? VarRole::Dx : VarRole::Dt, info.i);
    s += wk * (NcPoly::variable(A, v) * NcPoly::variable(A, *d));
  }
  InitialIdealOptions io;
  io.gb = opt.base.gb;
  auto G = initial_ideal(I, full, std::vector<std::int64_t>(static_cast<std::size_t>(A->nvars()), 1), io);
  return finish(principal_intersect(s, G, opt.base.intersect));
}

}  // namespace bfun
