#include "bfun/dmod.hpp"
#include "bfun/errors.hpp"

namespace bfun {

namespace {

TermBag one() { return {{Integer(1), Mono{}}}; }
TermBag gen(int i, long c = 1) { return {{Integer(c), Mono::var(i)}}; }

void require_positive(int n, const char* what) {
  if (n < 1) throw InvalidArgument(std::string(what) + " must be at least 1");
}

AlgebraPtr finish(std::vector<VarInfo> vars, std::vector<Relation> rel) {
  const int n = static_cast<int>(vars.size());
  auto a = Algebra::create(std::move(vars), std::move(rel), MonOrdering::degrevlex(n));
  require_valid_presentation(*a);
  return a;
}

void push_weyl(std::vector<VarInfo>& vars, std::vector<Relation>& rel, const std::vector<std::string>& x) {
  const int base = static_cast<int>(vars.size());
  const int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i) vars.push_back({x[static_cast<std::size_t>(i)], VarRole::X, i});
  for (int i = 0; i < n; ++i) vars.push_back({"D" + x[static_cast<std::size_t>(i)], VarRole::Dx, i});
  for (int i = 0; i < n; ++i) rel.push_back({base + i, base + n + i, one()});
}

}  // namespace

std::string shift_name(int j, int p) { return p == 1 ? "Dt" : "Dt" + std::to_string(j + 1); }
std::string s_name(int j, int p) { return p == 1 ? "s" : "s" + std::to_string(j + 1); }
std::string t_name(int j, int r) { return r == 1 ? "t" : "t" + std::to_string(j + 1); }

std::vector<std::string> default_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

AlgebraPtr make_polynomial_ring(const std::vector<std::string>& names) {
  std::vector<VarInfo> vars;
  for (std::size_t i = 0; i < names.size(); ++i) vars.push_back({names[i], VarRole::X, static_cast<int>(i)});
  return finish(std::move(vars), {});
}

AlgebraPtr make_weyl(const std::vector<std::string>& x) {
  require_positive(static_cast<int>(x.size()), "n");
  std::vector<VarInfo> vars;
  std::vector<Relation> rel;
  push_weyl(vars, rel, x);
  return finish(std::move(vars), std::move(rel));
}

AlgebraPtr make_weyl(int n) { return make_weyl(default_names(n)); }

AlgebraPtr make_weyl_s(const std::vector<std::string>& x, int p) {
  require_positive(static_cast<int>(x.size()), "n");
  require_positive(p, "p");
  std::vector<VarInfo> vars;
  std::vector<Relation> rel;
  push_weyl(vars, rel, x);
  for (int j = 0; j < p; ++j) vars.push_back({s_name(j, p), VarRole::S, j});
  return finish(std::move(vars), std::move(rel));
}

AlgebraPtr make_bm_algebra(const std::vector<std::string>& x, int p) {
  require_positive(static_cast<int>(x.size()), "n");
  require_positive(p, "p");
  std::vector<VarInfo> vars;
  std::vector<Relation> rel;
  push_weyl(vars, rel, x);
  const int dt0 = static_cast<int>(vars.size());
  for (int j = 0; j < p; ++j) vars.push_back({shift_name(j, p), VarRole::Dt, j});
  const int s0 = static_cast<int>(vars.size());
  for (int j = 0; j < p; ++j) vars.push_back({s_name(j, p), VarRole::S, j});
  // Dt_j s_j = s_j Dt_j - Dt_j, i.e. s_j Dt_j = Dt_j s_j + Dt_j
  for (int j = 0; j < p; ++j) rel.push_back({dt0 + j, s0 + j, gen(dt0 + j)});
  return finish(std::move(vars), std::move(rel));
}

AlgebraPtr make_malgrange_algebra(const std::vector<std::string>& x, int r) {
  require_positive(static_cast<int>(x.size()), "n");
  require_positive(r, "r");
  std::vector<VarInfo> vars;
  std::vector<Relation> rel;
  for (int j = 0; j < r; ++j) vars.push_back({t_name(j, r), VarRole::T, j});
  push_weyl(vars, rel, x);
  const int dt0 = static_cast<int>(vars.size());
  for (int j = 0; j < r; ++j) vars.push_back({shift_name(j, r), VarRole::Dt, j});
  for (int j = 0; j < r; ++j) rel.push_back({j, dt0 + j, one()});
  return finish(std::move(vars), std::move(rel));
}

namespace {

// gl_r relations among s_ij (indices from s0, row major) and, when dt0 >= 0,
// [s_ij, Dt_k] = δ_jk Dt_i.
void push_gl(std::vector<VarInfo>& vars, std::vector<Relation>& rel, int r, int dt0) {
  const int s0 = static_cast<int>(vars.size());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      vars.push_back({"s_" + std::to_string(i + 1) + "_" + std::to_string(j + 1), VarRole::Sij, i, j});
  auto idx = [&](int i, int j) { return s0 + i * r + j; };
  if (dt0 >= 0)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        // s_ij Dt_j = Dt_j s_ij + Dt_i
        rel.push_back({dt0 + j, idx(i, j), gen(dt0 + i)});
  for (int a = 0; a < r * r; ++a)
    for (int b = a + 1; b < r * r; ++b) {
      const int i = a / r, j = a % r, k = b / r, l = b % r;
      // s_kl s_ij = s_ij s_kl - [s_ij, s_kl]
      TermBag tail;
      if (j == k) tail.push_back({Integer(-1), Mono::var(idx(i, l))});
      if (i == l) tail.push_back({Integer(1), Mono::var(idx(k, j))});
      if (tail.size() == 2 && tail[0].m == tail[1].m) tail.clear();
      if (!tail.empty()) rel.push_back({idx(i, j), idx(k, l), tail});
    }
}

}  // namespace

AlgebraPtr make_var_ann_algebra(const std::vector<std::string>& x, int r) {
  require_positive(static_cast<int>(x.size()), "n");
  require_positive(r, "r");
  std::vector<VarInfo> vars;
  std::vector<Relation> rel;
  push_weyl(vars, rel, x);
  const int dt0 = static_cast<int>(vars.size());
  for (int j = 0; j < r; ++j) vars.push_back({shift_name(j, r), VarRole::Dt, j});
  push_gl(vars, rel, r, dt0);
  return finish(std::move(vars), std::move(rel));
}

AlgebraPtr make_gl_weyl_algebra(const std::vector<std::string>& x, int r) {
  require_positive(static_cast<int>(x.size()), "n");
  require_positive(r, "r");
  std::vector<VarInfo> vars;
  std::vector<Relation> rel;
  push_weyl(vars, rel, x);
  push_gl(vars, rel, r, -1);
  return finish(std::move(vars), std::move(rel));
}

AlgebraPtr make_usl2() {
  std::vector<VarInfo> vars{{"e"}, {"f"}, {"h"}};
  std::vector<Relation> rel{
      {0, 1, {{Integer(-1), Mono::var(2)}}},  // fe = ef - h
      {0, 2, {{Integer(2), Mono::var(0)}}},   // he = eh + 2e
      {1, 2, {{Integer(-2), Mono::var(1)}}},  // hf = fh - 2f
  };
  return finish(std::move(vars), std::move(rel));
}

AlgebraPtr make_homogenized(const AlgebraPtr& a, const std::vector<std::int64_t>& wt, const MonOrdering& base) {
  const int n = a->nvars();
  if (static_cast<int>(wt.size()) != n) throw InvalidArgument("homogenization weights: one per generator");
  if (n + 1 > kMaxVars) throw InvalidArgument("too many generators to homogenize");
  for (auto w : wt)
    if (w <= 0) throw InvalidArgument("homogenization weights must be positive integers");
  std::vector<VarInfo> vars;
  for (int i = 0; i < n; ++i) vars.push_back(a->var(i));
  vars.push_back({"h", VarRole::H});
  std::vector<Relation> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& t = a->tail(i, j);
      if (t.empty()) continue;
      TermBag ht;
      const std::int64_t target = wt[static_cast<std::size_t>(i)] + wt[static_cast<std::size_t>(j)];
      for (const auto& term : t) {
        std::int64_t e = target - weighted_degree(term.m, wt);
        if (e < 0) throw InvalidArgument("relation tail exceeds the homogenization degree");
        Mono m = term.m;
        m[n] = static_cast<std::uint16_t>(e);
        ht.push_back({term.c, m});
      }
      rel.push_back({i, j, std::move(ht)});
    }
  std::vector<std::int64_t> row(wt);
  row.push_back(1);
  MonOrdering ext(n + 1, base.kind(), base.stages(), base.label());
  auto ord = MonOrdering::homogenized(ext, row, n);
  auto h = Algebra::create(std::move(vars), std::move(rel), ord);
  require_valid_presentation(*h);
  return h;
}

}  // namespace bfun
