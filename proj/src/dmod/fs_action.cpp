#include <algorithm>

#include "bfun/dmod.hpp"
#include "bfun/errors.hpp"

namespace bfun {

std::optional<NcPoly> divide_exact(const NcPoly& a, const NcPoly& b) {
  if (b.is_zero()) throw InvalidArgument("division by zero");
  if (!a.alg().is_commutative()) throw NoncommutativeSupport("divide_exact needs a commutative ring");
  NcPoly r = a;
  std::vector<Term> q;
  const Mono& lb = b.lm();
  const Rational& cb = b.lc();
  while (!r.is_zero()) {
    if (!lb.divides(r.lm())) return std::nullopt;
    Term t{r.lc() / cb, r.lm() / lb};
    q.push_back(t);
    r -= mul_term_left(t.c, t.m, b);
  }
  return NcPoly::from_terms(a.algebra(), std::move(q));
}

FsModule::FsModule(const std::vector<NcPoly>& f) {
  if (f.empty()) throw InvalidArgument("empty polynomial tuple");
  const Algebra& src = f.front().alg();
  std::vector<VarInfo> vars;
  for (int v = 0; v < src.nvars(); ++v) {
    const auto& info = src.var(v);
    if (info.role != VarRole::X && info.role != VarRole::Plain)
      throw InvalidArgument("f must live in a commutative ring of x generators");
    vars.push_back({info.name, VarRole::X, info.role == VarRole::X ? info.i : v});
  }
  n_ = static_cast<int>(vars.size());
  const int r = static_cast<int>(f.size());
  for (int j = 0; j < r; ++j) vars.push_back({s_name(j, r), VarRole::S, j});
  const int nv = static_cast<int>(vars.size());
  if (nv > kMaxVars) throw InvalidArgument("too many generators");
  ring_ = Algebra::create(std::move(vars), {}, MonOrdering::degrevlex(nv));
  for (const auto& p : f) {
    if (!p.alg().same_presentation(src)) throw AlgebraMismatch("tuple entries must share a ring");
    if (p.is_zero()) throw InvalidArgument("polynomials in the tuple must be nonzero");
    f_.push_back(embed_x(p, ring_));
  }
  df_.resize(static_cast<std::size_t>(n_));
  for (int m = 0; m < n_; ++m)
    for (const auto& p : f_) df_[static_cast<std::size_t>(m)].push_back(partial(p, m));
}

FsElement FsModule::unit() const {
  return {NcPoly::constant(ring_, 1), std::vector<int>(static_cast<std::size_t>(r()), 0)};
}

NcPoly FsModule::shift_s(const NcPoly& p, int j, int by) const {
  if (by == 0) return p;
  const int sv = n_ + j;
  NcPoly out(ring_);
  NcPoly step = NcPoly::variable(ring_, sv) + NcPoly::constant(ring_, by);
  std::vector<NcPoly> pw{NcPoly::constant(ring_, 1)};
  for (const auto& t : p.terms()) {
    const int e = t.m[sv];
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * step);
    Mono rest = t.m;
    rest[sv] = 0;
    out += mul_term_left(t.c, rest, pw[static_cast<std::size_t>(e)]);
  }
  return out;
}

void FsModule::cancel(FsElement& e) const {
  if (e.num.is_zero()) {
    std::fill(e.den.begin(), e.den.end(), 0);
    return;
  }
  for (int j = 0; j < r(); ++j) {
    auto& k = e.den[static_cast<std::size_t>(j)];
    while (k > 0) {
      auto q = divide_exact(e.num, f_[static_cast<std::size_t>(j)]);
      if (!q) break;
      e.num = std::move(*q);
      --k;
    }
  }
}

FsElement FsModule::act(const VarInfo& v, const FsElement& e) const {
  FsElement out = e;
  const auto sv = [&](int j) { return NcPoly::variable(ring_, n_ + j); };
  auto check = [&](int i, int bound) {
    if (i < 0 || i >= bound) throw InvalidArgument("generator " + v.name + " has no counterpart in the f^s module");
  };
  switch (v.role) {
    case VarRole::X:
      check(v.i, n_);
      out.num = NcPoly::variable(ring_, v.i) * e.num;
      return out;
    case VarRole::S:
      check(v.i, r());
      out.num = sv(v.i) * e.num;
      return out;
    case VarRole::Dx: {
      check(v.i, n_);
      const auto& d = df_[static_cast<std::size_t>(v.i)];
      std::vector<int> J;
      for (int j = 0; j < r(); ++j)
        if (!d[static_cast<std::size_t>(j)].is_zero()) J.push_back(j);
      NcPoly prod = NcPoly::constant(ring_, 1);
      for (int l : J) prod = prod * f_[static_cast<std::size_t>(l)];
      NcPoly num = partial(e.num, v.i) * prod;
      for (int j : J) {
        NcPoly others = NcPoly::constant(ring_, 1);
        for (int l : J)
          if (l != j) others = others * f_[static_cast<std::size_t>(l)];
        NcPoly sk = sv(j) - NcPoly::constant(ring_, e.den[static_cast<std::size_t>(j)]);
        num += e.num * sk * d[static_cast<std::size_t>(j)] * others;
      }
      out.num = std::move(num);
      for (int l : J) ++out.den[static_cast<std::size_t>(l)];
      break;
    }
    case VarRole::T:
      check(v.i, r());
      out.num = shift_s(e.num, v.i, 1) * f_[static_cast<std::size_t>(v.i)];
      break;
    case VarRole::Dt:
      check(v.i, r());
      out.num = -(sv(v.i) * shift_s(e.num, v.i, -1));
      ++out.den[static_cast<std::size_t>(v.i)];
      break;
    case VarRole::Sij: {
      check(v.i, r());
      check(v.j, r());
      NcPoly shifted = v.i == v.j ? e.num : shift_s(shift_s(e.num, v.j, 1), v.i, -1);
      out.num = sv(v.i) * shifted * f_[static_cast<std::size_t>(v.j)];
      ++out.den[static_cast<std::size_t>(v.i)];
      break;
    }
    default:
      throw UnsupportedGenerator("generator " + v.name + " has no action on f^s");
  }
  cancel(out);
  return out;
}

FsElement FsModule::apply(const NcPoly& p, const FsElement& e) const {
  const Algebra& a = p.alg();
  std::vector<FsElement> parts;
  std::vector<int> top(static_cast<std::size_t>(r()), 0);
  for (const auto& t : p.terms()) {
    FsElement cur = e;
    for (int v = a.nvars() - 1; v >= 0 && !cur.is_zero(); --v)
      for (int k = 0; k < t.m[v] && !cur.is_zero(); ++k) cur = act(a.var(v), cur);
    if (cur.is_zero()) continue;
    cur.num *= t.c;
    for (int j = 0; j < r(); ++j)
      top[static_cast<std::size_t>(j)] = std::max(top[static_cast<std::size_t>(j)], cur.den[static_cast<std::size_t>(j)]);
    parts.push_back(std::move(cur));
  }
  FsElement out{NcPoly(ring_), top};
  for (auto& part : parts) {
    NcPoly num = std::move(part.num);
    for (int j = 0; j < r(); ++j)
      for (int k = part.den[static_cast<std::size_t>(j)]; k < top[static_cast<std::size_t>(j)]; ++k)
        num = num * f_[static_cast<std::size_t>(j)];
    out.num += num;
  }
  cancel(out);
  return out;
}

std::string FsModule::to_string(const FsElement& e) const {
  if (e.is_zero()) return "0";
  std::string den;
  for (int j = 0; j < r(); ++j) {
    const int k = e.den[static_cast<std::size_t>(j)];
    if (!k) continue;
    if (!den.empty()) den += "*";
    den += "(" + f_[static_cast<std::size_t>(j)].to_string() + ")";
    if (k > 1) den += "^" + std::to_string(k);
  }
  if (den.empty()) return "(" + e.num.to_string() + ")*f^s";
  return "(" + e.num.to_string() + ")/" + den + "*f^s";
}

FsElement apply_to_fs(const NcPoly& p, const std::vector<NcPoly>& f) { return FsModule(f).apply(p); }

}  // namespace bfun
