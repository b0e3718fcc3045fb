#include <algorithm>

#include "bfun/errors.hpp"
#include "bfun/groebner.hpp"

namespace bfun {

namespace detail {

namespace {

void sort_combine(IPoly& t, const MonOrdering& ord) {
  std::sort(t.begin(), t.end(), [&](const ITerm& a, const ITerm& b) { return ord.cmp(a.m, b.m) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i + 1;
    Integer c = std::move(t[i].c);
    while (j < t.size() && t[j].m == t[i].m) c += t[j++].c;
    if (c != 0) {
      t[out].m = t[i].m;
      t[out].c = std::move(c);
      ++out;
    }
    i = j;
  }
  t.resize(out);
}

}  // namespace

Integer make_primitive(IPoly& p) {
  if (p.empty()) return Integer(1);
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.front().c < 0) g = -g;
  if (g != 1)
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  return g;
}

IPoly to_ipoly(const NcPoly& p, Rational* factor) {
  IPoly out;
  out.reserve(p.size());
  std::vector<Rational> cs;
  cs.reserve(p.size());
  for (const auto& t : p.terms()) cs.push_back(t.c);
  Integer den = common_denominator(cs);
  for (const auto& t : p.terms()) {
    Rational v = t.c * den;
    out.push_back({v.get_num(), t.m});
  }
  Integer g = make_primitive(out);
  if (factor) *factor = Rational(den) / Rational(g);
  return out;
}

NcPoly to_ncpoly(const AlgebraPtr& a, const IPoly& p, const Rational& scale) {
  std::vector<Term> t;
  t.reserve(p.size());
  for (const auto& x : p) t.push_back({Rational(x.c) * scale, x.m});
  return NcPoly::from_sorted(a, std::move(t));
}

IPoly mul_mono_left(const Algebra& a, const Mono& q, const IPoly& g) {
  IPoly out;
  if (q.is_one()) return g;
  const std::uint32_t nc = a.nontrivial_mask(q);
  out.reserve(g.size());
  // q*m leads q*t and keeps the order of g; only the lower terms need sorting.
  IPoly extra;
  for (const auto& t : g) {
    const Mono top = q * t.m;
    if (!(t.m.support() & nc)) {
      out.push_back({t.c, top});
      continue;
    }
    for (auto& u : a.multiply(q, t.m)) {
      if (u.m == top)
        out.push_back({u.c * t.c, top});
      else
        extra.push_back({u.c * t.c, u.m});
    }
  }
  if (extra.empty()) return out;
  sort_combine(extra, a.ordering());
  return axpy(a.ordering(), Integer(1), out, 0, Integer(-1), extra, 0);
}

IPoly mul_mono_right(const Algebra& a, const IPoly& g, const Mono& q) {
  IPoly out;
  if (q.is_one()) return g;
  for (const auto& t : g) {
    if (!a.product_is_nontrivial(t.m, q)) {
      out.push_back({t.c, t.m * q});
      continue;
    }
    for (auto& u : a.multiply(t.m, q)) out.push_back({u.c * t.c, u.m});
  }
  sort_combine(out, a.ordering());
  return out;
}

IPoly mul(const Algebra& a, const IPoly& f, const IPoly& g) {
  IPoly out;
  for (const auto& s : f)
    for (const auto& t : g) {
      if (!a.product_is_nontrivial(s.m, t.m)) {
        out.push_back({s.c * t.c, s.m * t.m});
        continue;
      }
      for (auto& u : a.multiply(s.m, t.m)) out.push_back({u.c * s.c * t.c, u.m});
    }
  sort_combine(out, a.ordering());
  return out;
}

IPoly axpy(const MonOrdering& ord, const Integer& a, const IPoly& f, std::size_t i, const Integer& b,
           const IPoly& g, std::size_t j) {
  IPoly out;
  out.reserve(f.size() - i + g.size() - j);
  const bool a1 = a == 1;
  Integer tmp;
  while (i < f.size() && j < g.size()) {
    int c = ord.cmp(f[i].m, g[j].m);
    if (c > 0) {
      out.push_back({a1 ? f[i].c : Integer(a * f[i].c), f[i].m});
      ++i;
    } else if (c < 0) {
      out.push_back({Integer(-b * g[j].c), g[j].m});
      ++j;
    } else {
      tmp = a * f[i].c;
      tmp -= b * g[j].c;
      if (tmp != 0) out.push_back({tmp, f[i].m});
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back({a1 ? f[i].c : Integer(a * f[i].c), f[i].m});
  for (; j < g.size(); ++j) out.push_back({Integer(-b * g[j].c), g[j].m});
  return out;
}

void ReducerSet::add(IPoly p) {
  if (p.empty()) throw InvalidArgument("zero reducer");
  lms_.push_back(p.front().m);
  masks_.push_back(p.front().m.support());
  active_.push_back(true);
  polys_.push_back(std::move(p));
}

namespace {

// Sum of sorted runs; run k holds at most 4^(k+2) terms, so adding a short
// reducer touches only the small runs.
class GeoBucket {
 public:
  GeoBucket(const MonOrdering& ord, IPoly p) : ord_(ord) { add(std::move(p)); }

  // += -b * g[skip..]
  void sub_scaled(const Integer& b, const IPoly& g, std::size_t skip) {
    IPoly p(g.size() - skip);
    for (std::size_t j = skip; j < g.size(); ++j) {
      auto& t = p[j - skip];
      t.m = g[j].m;
      mpz_mul(t.c.get_mpz_t(), b.get_mpz_t(), g[j].c.get_mpz_t());
      mpz_neg(t.c.get_mpz_t(), t.c.get_mpz_t());
    }
    add(std::move(p));
  }

  /// Run holding the leading term after equal heads are summed into it, or -1.
  int lead() {
    for (;;) {
      int best = -1;
      for (std::size_t k = 0; k < runs_.size(); ++k)
        if (live(k) && (best < 0 || ord_.cmp(head(k).m, head(static_cast<std::size_t>(best)).m) > 0))
          best = static_cast<int>(k);
      if (best < 0) return -1;
      ITerm& top = head(static_cast<std::size_t>(best));
      for (std::size_t k = 0; k < runs_.size(); ++k)
        if (static_cast<int>(k) != best && live(k) && head(k).m == top.m) {
          top.c += head(k).c;
          pop(k);
        }
      if (top.c != 0) return best;
      pop(static_cast<std::size_t>(best));
    }
  }

  ITerm& head(std::size_t k) { return runs_[k].t[runs_[k].pos]; }
  void pop(std::size_t k) { ++runs_[k].pos; }

  void scale(const Integer& a) {
    for_each([&](Integer& c) { c *= a; });
  }

  template <class F>
  void for_each(F&& f) {
    for (auto& r : runs_)
      for (std::size_t i = r.pos; i < r.t.size(); ++i) f(r.t[i].c);
  }

  /// Coefficients of two distinct live terms, or nullptr.
  std::pair<const Integer*, const Integer*> two_coefficients() const {
    const Integer* u = nullptr;
    for (const auto& r : runs_) {
      if (r.pos >= r.t.size()) continue;
      if (r.t.size() > r.pos + 1) return {&r.t[r.pos].c, &r.t.back().c};
      if (u) return {u, &r.t[r.pos].c};
      u = &r.t[r.pos].c;
    }
    return {u, nullptr};
  }

  IPoly flush() {
    IPoly out, tmp;
    for (std::size_t k = 0; k < runs_.size(); ++k) {
      if (!live(k)) continue;
      merge(runs_[k].t, runs_[k].pos, out, 0, tmp);
      std::swap(out, tmp);
    }
    runs_.clear();
    return out;
  }

 private:
  struct Run {
    IPoly t;
    std::size_t pos = 0;
  };

  static std::size_t cap(std::size_t k) { return std::size_t(16) << (2 * k); }

  bool live(std::size_t k) const { return runs_[k].pos < runs_[k].t.size(); }

  void add(IPoly p) {
    if (p.empty()) return;
    std::size_t k = 0;
    while (cap(k) < p.size()) ++k;
    IPoly tmp;
    for (;;) {
      if (k >= runs_.size()) runs_.resize(k + 1);
      Run& r = runs_[k];
      if (!live(k)) {
        r.t = std::move(p);
        r.pos = 0;
        return;
      }
      merge(r.t, r.pos, p, 0, tmp);
      r.t.clear();
      r.pos = 0;
      if (tmp.size() <= cap(k)) {
        std::swap(r.t, tmp);
        return;
      }
      std::swap(p, tmp);
      ++k;
    }
  }

  // out = a[i..] + b[j..], moving coefficients.
  void merge(IPoly& a, std::size_t i, IPoly& b, std::size_t j, IPoly& out) const {
    out.clear();
    out.reserve(a.size() - i + b.size() - j);
    while (i < a.size() && j < b.size()) {
      const int c = ord_.cmp(a[i].m, b[j].m);
      if (c > 0) {
        out.push_back(std::move(a[i++]));
      } else if (c < 0) {
        out.push_back(std::move(b[j++]));
      } else {
        a[i].c += b[j].c;
        if (a[i].c != 0) out.push_back(std::move(a[i]));
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
    for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
  }

  const MonOrdering& ord_;
  std::vector<Run> runs_;
};

}  // namespace

IPoly reduce(const Algebra& a, IPoly p, const ReducerSet& g, bool full, Rational* scale) {
  const auto& ord = a.ordering();
  GeoBucket f(ord, std::move(p));
  IPoly r;
  Integer ga, gb, d;
  unsigned steps = 0;
  for (int b; (b = f.lead()) >= 0;) {
    ITerm& lt = f.head(static_cast<std::size_t>(b));
    long k = g.find_divisor(lt.m);
    if (k < 0) {
      if (!full) break;
      r.push_back(std::move(lt));
      f.pop(static_cast<std::size_t>(b));
      continue;
    }
    const IPoly& red = g.poly(static_cast<std::size_t>(k));
    Mono q = lt.m / g.lm(static_cast<std::size_t>(k));
    IPoly h;
    const IPoly* hp = &red;
    if (!q.is_one()) {
      h = mul_mono_left(a, q, red);
      hp = &h;
    }
    // *hp leads with q*lm(red) and coefficient lc(red).
    mpz_gcd(d.get_mpz_t(), hp->front().c.get_mpz_t(), lt.c.get_mpz_t());
    mpz_divexact(ga.get_mpz_t(), hp->front().c.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(gb.get_mpz_t(), lt.c.get_mpz_t(), d.get_mpz_t());
    if (ga < 0) {
      ga = -ga;
      gb = -gb;
    }
    f.pop(static_cast<std::size_t>(b));
    if (ga != 1) {
      f.scale(ga);
      for (auto& t : r) t.c *= ga;
      if (scale) *scale *= ga;
    }
    f.sub_scaled(gb, *hp, 1);
    if (++steps % 32 == 0) {
      // cheap probe first: two coefficients are usually coprime
      auto [u, v] = f.two_coefficients();
      if (!u) continue;
      if (!v) v = r.empty() ? u : &r.front().c;
      Integer c;
      mpz_gcd(c.get_mpz_t(), u->get_mpz_t(), v->get_mpz_t());
      if (c == 1) continue;
      for (const auto& t : r) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
        if (c == 1) break;
      }
      if (c != 1)
        f.for_each([&](Integer& x) {
          if (c != 1) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
        });
      if (c > 1) {
        for (auto& t : r) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        f.for_each([&](Integer& x) { mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t()); });
        if (scale) *scale /= c;
      }
    }
  }
  IPoly rest = f.flush();
  r.reserve(r.size() + rest.size());
  for (auto& t : rest) r.push_back(std::move(t));
  return r;
}

}  // namespace detail

GroebnerBasis::GroebnerBasis(AlgebraPtr a, std::vector<NcPoly> elements, bool reduced, bool complete)
    : alg_(std::move(a)), red_(std::make_shared<detail::ReducerSet>()), reduced_(reduced), complete_(complete) {
  for (auto& e : elements) {
    if (e.is_zero()) continue;
    if (!e.alg().same_context(*alg_)) e = e.in_algebra(alg_);
    e = e.monic();
    red_->add(detail::to_ipoly(e));
    elems_.push_back(std::move(e));
  }
}

bool GroebnerBasis::is_unit() const {
  for (const auto& e : elems_)
    if (e.lm().is_one()) return true;
  return false;
}

std::vector<Mono> GroebnerBasis::leading() const {
  std::vector<Mono> out;
  out.reserve(elems_.size());
  for (const auto& e : elems_) out.push_back(e.lm());
  return out;
}

NcPoly GroebnerBasis::normal_form(const NcPoly& p) const {
  if (p.is_zero()) return NcPoly(alg_);
  NcPoly q = p.alg().same_context(*alg_) ? p : p.in_algebra(alg_);
  Rational k;
  auto ip = detail::to_ipoly(q, &k);
  Rational scale = 1;
  auto r = detail::reduce(*alg_, std::move(ip), *red_, true, &scale);
  // r = scale * k * q  (mod I)
  return detail::to_ncpoly(alg_, r, Rational(1) / (scale * k));
}

NcPoly normal_form(const NcPoly& p, const std::vector<NcPoly>& g) {
  if (!p.algebra()) throw InvalidArgument("normal_form: polynomial without algebra");
  if (!p.alg().ordering().is_global()) throw NonGlobalOrdering("normal_form requires a global ordering");
  detail::ReducerSet rs;
  for (const auto& x : g) {
    if (x.is_zero()) continue;
    require_same_context(p, x);
    rs.add(detail::to_ipoly(x));
  }
  if (p.is_zero()) return p;
  Rational k;
  auto ip = detail::to_ipoly(p, &k);
  Rational scale = 1;
  auto r = detail::reduce(p.alg(), std::move(ip), rs, true, &scale);
  return detail::to_ncpoly(p.algebra(), r, Rational(1) / (scale * k));
}

NcPoly spoly(const NcPoly& f, const NcPoly& g) {
  require_same_context(f, g);
  if (f.is_zero() || g.is_zero()) return NcPoly(f.algebra());
  const Algebra& A = f.alg();
  auto fi = detail::to_ipoly(f), gi = detail::to_ipoly(g);
  Mono l = Mono::lcm(fi.front().m, gi.front().m);
  auto a = detail::mul_mono_left(A, l / fi.front().m, fi);
  auto b = detail::mul_mono_left(A, l / gi.front().m, gi);
  Integer d = gcd(a.front().c, b.front().c);
  Integer ca = b.front().c / d, cb = a.front().c / d;
  auto s = detail::axpy(A.ordering(), ca, a, 1, cb, b, 1);
  detail::make_primitive(s);
  return detail::to_ncpoly(f.algebra(), s);
}

}  // namespace bfun
