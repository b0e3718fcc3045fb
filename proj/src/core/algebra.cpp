#include "bfun/algebra.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "bfun/errors.hpp"

namespace bfun {

namespace detail {

namespace {

Mono restrict_to(const Mono& a, std::uint32_t mask) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i)
    if (mask & (1u << i)) r[i] = a[i];
  return r;
}

int lowest_var(std::uint32_t mask) { return std::countr_zero(mask); }
int highest_var(std::uint32_t mask) { return 31 - std::countl_zero(mask); }

/// Merges duplicate monomials and drops zero coefficients.
void combine(TermBag& bag) {
  if (bag.size() < 2) {
    if (bag.size() == 1 && bag[0].c == 0) bag.clear();
    return;
  }
  std::sort(bag.begin(), bag.end(), [](const ITerm& x, const ITerm& y) { return MonoBytesLess{}(x.m, y.m); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < bag.size();) {
    std::size_t j = i + 1;
    Integer c = std::move(bag[i].c);
    while (j < bag.size() && bag[j].m == bag[i].m) c += bag[j++].c;
    if (c != 0) {
      bag[out].m = bag[i].m;
      bag[out].c = std::move(c);
      ++out;
    }
    i = j;
  }
  bag.resize(out);
}

}  // namespace

enum class PairKind { Commuting, Weyl, ShiftLow, ShiftHigh, Generic };

struct PairInfo {
  PairKind kind = PairKind::Commuting;
  Integer c;   // Weyl / shift constant
  Mono z;      // central monomial of a Weyl-type tail
  TermBag tail;
};

struct Component {
  std::uint32_t mask = 0;
  bool single_pair = false;
  int k = -1, l = -1;
};

/// Generators, tails, and the product engine. Immutable apart from the
/// memo tables of generic generator-power products.
class Presentation {
 public:
  Presentation(std::vector<VarInfo> vars, std::vector<Relation> relations);

  int n = 0;
  std::vector<VarInfo> vars;
  std::vector<PairInfo> pairs;  // n*n, only i<j used
  std::array<std::uint32_t, kMaxVars> nc_above{};
  std::uint32_t central = 0;
  std::vector<Component> components;

  const PairInfo& pair(int i, int j) const { return pairs[static_cast<std::size_t>(i * n + j)]; }

  bool nontrivial(const Mono& a, const Mono& b) const {
    std::uint32_t sa = a.support(), sb = b.support();
    while (sb) {
      int k = lowest_var(sb);
      sb &= sb - 1;
      if (sa & nc_above[static_cast<std::size_t>(k)]) return true;
    }
    return false;
  }

  std::uint32_t nontrivial_mask(const Mono& a) const {
    const std::uint32_t sa = a.support();
    std::uint32_t out = 0;
    for (std::size_t k = 0; k < nc_above.size(); ++k)
      if (sa & nc_above[k]) out |= 1u << k;
    return out;
  }

  TermBag multiply(const Mono& a, const Mono& b) const;

 private:
  TermBag pair_product(const PairInfo& p, int k, int l, const Mono& a, const Mono& b) const;
  /// x_l^alpha x_k^beta, k < l.
  const TermBag* generic_power(int k, int l, int alpha, int beta, TermBag& scratch) const;
  TermBag power_product(int k, int l, int alpha, int beta, TermBag& scratch, const TermBag** out) const;
  TermBag mul_mm(const Mono& a, const Mono& b) const;
  TermBag mul_mg(const Mono& a, int k, int beta) const;

  struct Memo {
    mutable std::shared_mutex mu;
    std::unordered_map<std::uint32_t, TermBag> table;
  };
  std::vector<std::unique_ptr<Memo>> memo_;  // per pair, generic kind only
};

Presentation::Presentation(std::vector<VarInfo> vs, std::vector<Relation> relations)
    : n(static_cast<int>(vs.size())), vars(std::move(vs)) {
  if (n < 0 || n > kMaxVars) throw InvalidArgument("algebra: at most 32 generators are supported");
  pairs.resize(static_cast<std::size_t>(n * n));
  memo_.resize(static_cast<std::size_t>(n * n));
  for (auto& r : relations) {
    if (r.i < 0 || r.j >= n || r.i >= r.j) throw InvalidArgument("algebra: relation indices must satisfy i < j");
    for (const auto& t : r.tail)
      for (int v = n; v < kMaxVars; ++v)
        if (t.m[v]) throw InvalidArgument("algebra: tail uses an unknown generator");
    combine(r.tail);
    if (r.tail.empty()) continue;
    auto& p = pairs[static_cast<std::size_t>(r.i * n + r.j)];
    p.tail = std::move(r.tail);
    p.kind = PairKind::Generic;
  }
  std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
  central = all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pair(i, j).kind != PairKind::Commuting) {
        nc_above[static_cast<std::size_t>(i)] |= 1u << j;
        central &= ~((1u << i) | (1u << j));
      }
  // Classify tails.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto& p = pairs[static_cast<std::size_t>(i * n + j)];
      if (p.kind == PairKind::Commuting) continue;
      if (p.tail.size() == 1) {
        const auto& t = p.tail.front();
        std::uint32_t s = t.m.support();
        if ((s & ~central) == 0) {
          p.kind = PairKind::Weyl;
          p.c = t.c;
          p.z = t.m;
        } else if (t.m == Mono::var(i)) {
          p.kind = PairKind::ShiftLow;
          p.c = t.c;
        } else if (t.m == Mono::var(j)) {
          p.kind = PairKind::ShiftHigh;
          p.c = t.c;
        }
      }
      if (p.kind == PairKind::Generic) memo_[static_cast<std::size_t>(i * n + j)] = std::make_unique<Memo>();
    }
  // Connected components over non-central generators.
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto unite = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& p = pair(i, j);
      if (p.kind == PairKind::Commuting) continue;
      unite(i, j);
      for (const auto& t : p.tail) {
        std::uint32_t s = t.m.support() & ~central;
        while (s) {
          int v = lowest_var(s);
          s &= s - 1;
          unite(i, v);
        }
      }
    }
  for (int v = 0; v < n; ++v) {
    if (central & (1u << v)) continue;
    int r = find(v);
    auto it = std::find_if(components.begin(), components.end(),
                           [&](const Component& c) { return find(lowest_var(c.mask)) == r; });
    if (it == components.end()) {
      components.push_back({});
      it = components.end() - 1;
    }
    it->mask |= 1u << v;
  }
  for (auto& c : components) {
    if (std::popcount(c.mask) != 2) continue;
    int k = lowest_var(c.mask), l = highest_var(c.mask);
    auto kind = pair(k, l).kind;
    if (kind == PairKind::Weyl || kind == PairKind::ShiftLow || kind == PairKind::ShiftHigh) {
      c.single_pair = true;
      c.k = k;
      c.l = l;
    }
  }
}

// a = x_k^{ak} x_l^{al} (times anything commuting), b likewise; closed forms.
TermBag Presentation::pair_product(const PairInfo& p, int k, int l, const Mono& a, const Mono& b) const {
  const int ak = a[k], al = a[l], bk = b[k], bl = b[l];
  Mono base = a * b;
  TermBag out;
  switch (p.kind) {
    case PairKind::Weyl: {
      // x_l^al x_k^bk = sum_i C(al,i) C(bk,i) i! c^i z^i x_k^{bk-i} x_l^{al-i}
      int top = std::min(al, bk);
      out.reserve(static_cast<std::size_t>(top + 1));
      Integer coef = 1;
      Mono m = base;
      for (int i = 0;; ++i) {
        out.push_back({coef, m});
        if (i == top) break;
        coef *= (al - i);
        coef *= (bk - i);
        coef /= (i + 1);
        coef *= p.c;
        m[k] = static_cast<std::uint16_t>(m[k] - 1);
        m[l] = static_cast<std::uint16_t>(m[l] - 1);
        m = m * p.z;
      }
      break;
    }
    case PairKind::ShiftLow: {
      // x_l^al x_k^bk = x_k^bk (x_l + c bk)^al
      Integer shift = p.c * bk;
      if (shift == 0 || al == 0) return {{Integer(1), base}};
      out.reserve(static_cast<std::size_t>(al + 1));
      // term with x_l^{m + bl}: C(al, m) shift^{al-m}
      Integer coef = 1;  // m = al
      Mono mm = base;
      for (int m = al;; --m) {
        out.push_back({coef, mm});
        if (m == 0) break;
        coef *= m;
        coef *= shift;
        coef /= (al - m + 1);
        mm[l] = static_cast<std::uint16_t>(mm[l] - 1);
      }
      break;
    }
    case PairKind::ShiftHigh: {
      // x_l^al x_k^bk = (x_k + c al)^bk x_l^al
      Integer shift = p.c * al;
      if (shift == 0 || bk == 0) return {{Integer(1), base}};
      out.reserve(static_cast<std::size_t>(bk + 1));
      Integer coef = 1;
      Mono mm = base;
      for (int m = bk;; --m) {
        out.push_back({coef, mm});
        if (m == 0) break;
        coef *= m;
        coef *= shift;
        coef /= (bk - m + 1);
        mm[k] = static_cast<std::uint16_t>(mm[k] - 1);
      }
      break;
    }
    default:
      throw InvalidArgument("pair_product on a non closed-form pair");
  }
  (void)ak;
  (void)bl;
  return out;
}

const TermBag* Presentation::generic_power(int k, int l, int alpha, int beta, TermBag& scratch) const {
  auto& memo = *memo_[static_cast<std::size_t>(k * n + l)];
  const bool cacheable = alpha < 0x10000 && beta < 0x10000;
  const std::uint32_t key = (static_cast<std::uint32_t>(alpha) << 16) | static_cast<std::uint32_t>(beta);
  if (cacheable) {
    std::shared_lock lock(memo.mu);
    auto it = memo.table.find(key);
    if (it != memo.table.end()) return &it->second;
  }
  TermBag result;
  if (alpha == 1 && beta == 1) {
    result.push_back({Integer(1), Mono::var(k) * Mono::var(l)});
    for (const auto& t : pair(k, l).tail) result.push_back(t);
  } else if (alpha == 1) {
    TermBag s2;
    const TermBag* prev = generic_power(k, l, 1, beta - 1, s2);
    for (const auto& t : *prev) {
      TermBag part = mul_mg(t.m, k, 1);
      for (auto& u : part) result.push_back({u.c * t.c, u.m});
    }
  } else {
    TermBag s2;
    const TermBag* prev = generic_power(k, l, alpha - 1, beta, s2);
    Mono xl = Mono::var(l);
    for (const auto& t : *prev) {
      TermBag part = mul_mm(xl, t.m);
      for (auto& u : part) result.push_back({u.c * t.c, u.m});
    }
  }
  combine(result);
  if (!cacheable) {
    scratch = std::move(result);
    return &scratch;
  }
  std::unique_lock lock(memo.mu);
  auto [it, inserted] = memo.table.emplace(key, std::move(result));
  return &it->second;
}

TermBag Presentation::mul_mg(const Mono& a, int k, int beta) const {
  std::uint32_t conflict = a.support() & nc_above[static_cast<std::size_t>(k)];
  if (!conflict) {
    Mono r = a;
    Mono xk = Mono::var(k, beta);
    return {{Integer(1), r * xk}};
  }
  const int l = highest_var(conflict);
  const int alpha = a[l];
  std::uint32_t below = (1u << l) - 1;
  Mono A = restrict_to(a, below);
  Mono C = restrict_to(a, ~below & ~(1u << l));
  const auto& p = pair(k, l);
  TermBag scratch;
  TermBag closed;
  const TermBag* T;
  if (p.kind == PairKind::Generic) {
    T = generic_power(k, l, alpha, beta, scratch);
  } else {
    closed = pair_product(p, k, l, Mono::var(l, alpha), Mono::var(k, beta));
    T = &closed;
  }
  const bool a_one = A.is_one(), c_one = C.is_one();
  if (a_one && c_one) return *T;
  TermBag out;
  for (const auto& t : *T) {
    TermBag left = a_one ? TermBag{{Integer(1), t.m}} : mul_mm(A, t.m);
    for (auto& u : left) {
      if (c_one) {
        out.push_back({u.c * t.c, u.m});
      } else {
        TermBag right = mul_mm(u.m, C);
        for (auto& v : right) out.push_back({v.c * u.c * t.c, v.m});
      }
    }
  }
  combine(out);
  return out;
}

TermBag Presentation::mul_mm(const Mono& a, const Mono& b) const {
  if (b.is_one() || a.is_one() || !nontrivial(a, b)) return {{Integer(1), a * b}};
  std::uint32_t sb = b.support();
  const int k = lowest_var(sb);
  Mono rest = b;
  rest[k] = 0;
  TermBag r = mul_mg(a, k, b[k]);
  if (rest.is_one()) return r;
  TermBag out;
  for (const auto& t : r) {
    TermBag part = mul_mm(t.m, rest);
    for (auto& u : part) out.push_back({u.c * t.c, u.m});
  }
  combine(out);
  return out;
}

TermBag Presentation::multiply(const Mono& a, const Mono& b) const {
  if (!nontrivial(a, b)) return {{Integer(1), a * b}};
  Mono base = a * b;
  std::vector<TermBag> factors;
  for (const auto& comp : components) {
    Mono ac = restrict_to(a, comp.mask), bc = restrict_to(b, comp.mask);
    if (ac.is_one() || bc.is_one() || !nontrivial(ac, bc)) continue;
    for (int v = 0; v < kMaxVars; ++v)
      if (comp.mask & (1u << v)) base[v] = 0;
    if (comp.single_pair)
      factors.push_back(pair_product(pair(comp.k, comp.l), comp.k, comp.l, ac, bc));
    else
      factors.push_back(mul_mm(ac, bc));
  }
  TermBag cur{{Integer(1), base}};
  for (const auto& f : factors) {
    if (f.size() == 1) {
      for (auto& t : cur) {
        t.c *= f[0].c;
        t.m = t.m * f[0].m;
      }
      continue;
    }
    TermBag next;
    next.reserve(cur.size() * f.size());
    for (const auto& t : cur)
      for (const auto& u : f) next.push_back({t.c * u.c, t.m * u.m});
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

AlgebraPtr Algebra::create(std::vector<VarInfo> vars, std::vector<Relation> relations, MonOrdering ordering) {
  if (ordering.nvars() != static_cast<int>(vars.size()))
    throw InvalidArgument("algebra: ordering variable count does not match generator count");
  auto p = std::make_shared<const detail::Presentation>(std::move(vars), std::move(relations));
  return AlgebraPtr(new Algebra(std::move(p), std::move(ordering)));
}

AlgebraPtr Algebra::with_ordering(MonOrdering ordering) const {
  if (ordering.nvars() != nvars()) throw InvalidArgument("with_ordering: variable count mismatch");
  return AlgebraPtr(new Algebra(presentation_, std::move(ordering)));
}

int Algebra::nvars() const { return presentation_->n; }

const VarInfo& Algebra::var(int i) const {
  if (i < 0 || i >= nvars()) throw InvalidArgument("generator index out of range");
  return presentation_->vars[static_cast<std::size_t>(i)];
}

std::optional<int> Algebra::find(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (presentation_->vars[static_cast<std::size_t>(i)].name == name) return i;
  return std::nullopt;
}

std::optional<int> Algebra::find_role(VarRole role, int i, int j) const {
  for (int v = 0; v < nvars(); ++v) {
    const auto& info = presentation_->vars[static_cast<std::size_t>(v)];
    if (info.role == role && info.i == i && info.j == j) return v;
  }
  return std::nullopt;
}

std::vector<int> Algebra::vars_with_role(VarRole role) const {
  std::vector<int> out;
  for (int v = 0; v < nvars(); ++v)
    if (presentation_->vars[static_cast<std::size_t>(v)].role == role) out.push_back(v);
  return out;
}

bool Algebra::commute(int i, int j) const {
  if (i == j) return true;
  if (i > j) std::swap(i, j);
  return presentation_->pair(i, j).kind == detail::PairKind::Commuting;
}

const TermBag& Algebra::tail(int i, int j) const {
  if (i >= j) throw InvalidArgument("tail(i, j) requires i < j");
  return presentation_->pair(i, j).tail;
}

bool Algebra::is_commutative() const {
  for (auto m : presentation_->nc_above)
    if (m) return false;
  return true;
}

std::uint32_t Algebra::central_mask() const { return presentation_->central; }

TermBag Algebra::multiply(const Mono& a, const Mono& b) const { return presentation_->multiply(a, b); }

bool Algebra::product_is_nontrivial(const Mono& a, const Mono& b) const { return presentation_->nontrivial(a, b); }

std::uint32_t Algebra::nontrivial_mask(const Mono& a) const { return presentation_->nontrivial_mask(a); }

// ---------------------------------------------------------------------------
// validation

namespace {

TermBag bag_mul(const Algebra& A, const TermBag& p, const TermBag& q) {
  TermBag out;
  for (const auto& a : p)
    for (const auto& b : q)
      for (auto& t : A.multiply(a.m, b.m)) out.push_back({t.c * a.c * b.c, t.m});
  detail::combine(out);
  return out;
}

TermBag gen(int i) { return {{Integer(1), Mono::var(i)}}; }

void bag_axpy(TermBag& acc, const TermBag& x, int sign) {
  for (const auto& t : x) acc.push_back({sign > 0 ? t.c : Integer(-t.c), t.m});
}

}  // namespace

PresentationDiagnostics validate_presentation(const Algebra& A) {
  PresentationDiagnostics d;
  const int n = A.nvars();
  const auto& ord = A.ordering();
  if (!ord.is_total() || !ord.is_global()) {
    d.ok = false;
    d.failure = PresentationDiagnostics::Failure::Nonglobal;
    d.message = "ordering '" + ord.label() + "' is not a global well-ordering";
    return d;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Mono xixj = Mono::var(i) * Mono::var(j);
      for (const auto& t : A.tail(i, j)) {
        if (ord.cmp(t.m, xixj) >= 0) {
          d.ok = false;
          d.failure = PresentationDiagnostics::Failure::Ordering;
          d.i = i;
          d.j = j;
          d.message = "ordering condition lm(d_ij) < x_i x_j fails for (" + A.name(i) + ", " + A.name(j) + ")";
          return d;
        }
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const auto& dij = A.tail(i, j);
        const auto& dik = A.tail(i, k);
        const auto& djk = A.tail(j, k);
        if (dij.empty() && dik.empty() && djk.empty()) continue;
        TermBag e;
        bag_axpy(e, bag_mul(A, dij, gen(k)), 1);
        bag_axpy(e, bag_mul(A, gen(k), dij), -1);
        bag_axpy(e, bag_mul(A, gen(j), dik), 1);
        bag_axpy(e, bag_mul(A, dik, gen(j)), -1);
        bag_axpy(e, bag_mul(A, djk, gen(i)), 1);
        bag_axpy(e, bag_mul(A, gen(i), djk), -1);
        detail::combine(e);
        if (!e.empty()) {
          d.ok = false;
          d.failure = PresentationDiagnostics::Failure::Nondegeneracy;
          d.i = i;
          d.j = j;
          d.k = k;
          d.message = "nondegeneracy condition fails for (" + A.name(i) + ", " + A.name(j) + ", " + A.name(k) + ")";
          return d;
        }
      }
  return d;
}

void require_valid_presentation(const Algebra& a) {
  auto d = validate_presentation(a);
  switch (d.failure) {
    case PresentationDiagnostics::Failure::None:
      return;
    case PresentationDiagnostics::Failure::Nondegeneracy:
      throw NondegeneracyViolated(d.i, d.j, d.k, d.message);
    case PresentationDiagnostics::Failure::Ordering:
      throw OrderingInadmissible(d.i, d.j, d.message);
    case PresentationDiagnostics::Failure::Nonglobal:
      throw NonGlobalOrdering(d.message);
  }
}

}  // namespace bfun
