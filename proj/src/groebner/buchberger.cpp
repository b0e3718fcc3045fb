#include <algorithm>
#include <exception>
#include <string>

#include "bfun/errors.hpp"
#include "bfun/groebner.hpp"

namespace bfun {

using detail::IPoly;

namespace {

struct Pair {
  std::size_t i, j;
  Mono lcm;
  std::int64_t deg;
  std::uint64_t seq;
  bool coprime;
};

bool pair_before(const Pair& a, const Pair& b) {
  return a.deg != b.deg ? a.deg < b.deg : a.seq < b.seq;
}

/// fg - gf, skipping term pairs whose product commutes.
IPoly bracket(const Algebra& A, const IPoly& f, const IPoly& g) {
  IPoly out;
  for (const auto& s : f)
    for (const auto& t : g) {
      const bool fwd = A.product_is_nontrivial(s.m, t.m), bwd = A.product_is_nontrivial(t.m, s.m);
      if (!fwd && !bwd) continue;
      Integer st = s.c * t.c;
      if (fwd)
        for (auto& u : A.multiply(s.m, t.m)) out.push_back({u.c * st, u.m});
      else
        out.push_back({st, s.m * t.m});
      if (bwd)
        for (auto& u : A.multiply(t.m, s.m)) out.push_back({Integer(-u.c * st), u.m});
      else
        out.push_back({Integer(-st), s.m * t.m});
    }
  // sort + combine via a zero-coefficient axpy with an empty second operand
  std::sort(out.begin(), out.end(), [&](const ITerm& a, const ITerm& b) { return A.ordering().cmp(a.m, b.m) > 0; });
  IPoly merged;
  for (auto& t : out) {
    if (!merged.empty() && merged.back().m == t.m) {
      merged.back().c += t.c;
      if (merged.back().c == 0) merged.pop_back();
    } else {
      merged.push_back(std::move(t));
    }
  }
  return merged;
}

bool supports_commute(const Algebra& A, std::uint32_t a, std::uint32_t b) {
  for (int i = 0; i < A.nvars(); ++i) {
    if (!(a >> i & 1u)) continue;
    for (int j = 0; j < A.nvars(); ++j)
      if ((b >> j & 1u) && !A.commute(i, j)) return false;
  }
  return true;
}

std::uint32_t ipoly_support(const IPoly& p) {
  std::uint32_t s = 0;
  for (const auto& t : p) s |= t.m.support();
  return s;
}

class Engine {
 public:
  Engine(const AlgebraPtr& a, const GbOptions& opt) : A_(*a), alg_(a), opt_(opt) {
    if (!A_.ordering().is_global()) throw NonGlobalOrdering("buchberger requires a global ordering");
    weights_ = A_.ordering().degree_weights();
  }

  void add_generators(const std::vector<NcPoly>& gens) {
    std::vector<IPoly> in;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      NcPoly h = g.alg().same_context(A_) ? g : g.in_algebra(alg_);
      in.push_back(detail::to_ipoly(h));
    }
    // Small leading monomials first keeps the initial reductions cheap.
    std::stable_sort(in.begin(), in.end(), [&](const IPoly& x, const IPoly& y) {
      return A_.ordering().cmp(x.front().m, y.front().m) < 0;
    });
    for (auto& p : in) {
      auto r = detail::reduce(A_, std::move(p), red_, true);
      if (!r.empty()) insert(std::move(r));
    }
  }

  void run_batched() {
    while (!pairs_.empty()) {
      auto batch = take_batch();
      std::vector<IPoly> results(batch.size());
      std::exception_ptr err;
#if defined(BFUN_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic) if (opt_.parallel && batch.size() > 1)
#endif
      for (long k = 0; k < static_cast<long>(batch.size()); ++k) {
        try {
          results[static_cast<std::size_t>(k)] = process(batch[static_cast<std::size_t>(k)]);
        } catch (...) {
#if defined(BFUN_HAVE_OPENMP)
#pragma omp critical(bfun_gb_err)
#endif
          if (!err) err = std::current_exception();
        }
      }
      if (err) std::rethrow_exception(err);
      for (auto& r : results) {
        if (r.empty()) continue;
        if (red_.size() > snapshot_) r = detail::reduce(A_, std::move(r), red_, opt_.tail_reduction);
        if (!r.empty()) insert(std::move(r));
      }
      report();
    }
  }

  void run_serial() {
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), pair_before);
      Pair p = *it;
      pairs_.erase(it);
      if (!within_cap(p)) continue;
      auto r = process(p);
      if (!r.empty()) insert(std::move(r));
      report();
    }
  }

  GroebnerBasis finish() {
    std::vector<NcPoly> out;
    for (std::size_t i = 0; i < red_.size(); ++i)
      if (red_.active(i)) out.push_back(detail::to_ncpoly(alg_, red_.poly(i)));
    if (opt_.reduced) return make_reduced(alg_, std::move(out), complete_);
    return GroebnerBasis(alg_, std::move(out), false, complete_);
  }

 private:
  std::int64_t degree(const Mono& m) const {
    std::int64_t d = 0;
    for (int i = 0; i < A_.nvars(); ++i) d += weights_[static_cast<std::size_t>(i)] * m[i];
    return d;
  }

  bool within_cap(const Pair& p) {
    if (opt_.degree_cap && p.deg > *opt_.degree_cap) {
      complete_ = false;
      return false;
    }
    return true;
  }

  std::vector<Pair> take_batch() {
    std::int64_t dmin = std::min_element(pairs_.begin(), pairs_.end(), pair_before)->deg;
    last_deg_ = dmin;
    std::vector<Pair> batch, rest;
    for (auto& p : pairs_) (p.deg == dmin ? batch : rest).push_back(p);
    pairs_ = std::move(rest);
    std::sort(batch.begin(), batch.end(), pair_before);
    std::vector<Pair> kept;
    for (auto& p : batch)
      if (within_cap(p)) kept.push_back(p);
    snapshot_ = red_.size();
    return kept;
  }

  IPoly process(const Pair& p) const {
    const IPoly& f = red_.poly(p.i);
    const IPoly& g = red_.poly(p.j);
    IPoly s;
    if (p.coprime && opt_.product_criterion) {
      s = bracket(A_, f, g);
    } else {
      auto a = detail::mul_mono_left(A_, p.lcm / f.front().m, f);
      auto b = detail::mul_mono_left(A_, p.lcm / g.front().m, g);
      Integer d = gcd(a.front().c, b.front().c);
      Integer ca = b.front().c / d, cb = a.front().c / d;
      s = detail::axpy(A_.ordering(), ca, a, 1, cb, b, 1);
    }
    if (s.empty()) return s;
    detail::make_primitive(s);
    auto r = detail::reduce(A_, std::move(s), red_, opt_.tail_reduction);
    detail::make_primitive(r);
    return r;
  }

  void insert(IPoly h) {
    detail::make_primitive(h);
    const std::size_t k = red_.size();
    const Mono lh = h.front().m;
    const std::uint32_t hs = ipoly_support(h);
    // chain criterion on existing pairs
    if (opt_.chain_criterion) {
      std::erase_if(pairs_, [&](const Pair& p) {
        if (!lh.divides(p.lcm)) return false;
        Mono li = Mono::lcm(red_.lm(p.i), lh), lj = Mono::lcm(red_.lm(p.j), lh);
        return !(li == p.lcm) && !(lj == p.lcm);
      });
    }
    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      if (!red_.active(i)) continue;
      Mono l = Mono::lcm(red_.lm(i), lh);
      bool cop = Mono::coprime(red_.lm(i), lh);
      fresh.push_back({i, k, l, degree(l), 0, cop});
    }
    std::vector<bool> commuting(fresh.size(), false);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      commuting[a] = fresh[a].coprime && opt_.product_criterion &&
                     supports_commute(A_, ipoly_support(red_.poly(fresh[a].i)), hs);
    std::vector<bool> drop(fresh.size(), false);
    if (opt_.chain_criterion) {
      // M: a proper divisor among the new lcms makes the pair redundant.
      for (std::size_t a = 0; a < fresh.size(); ++a)
        for (std::size_t b = 0; b < fresh.size() && !drop[a]; ++b)
          if (a != b && fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) drop[a] = true;
      // F: one pair per lcm; a commuting coprime pair kills the whole class.
      for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (drop[a]) continue;
        bool class_commutes = commuting[a];
        for (std::size_t b = a + 1; b < fresh.size(); ++b)
          if (!drop[b] && fresh[b].lcm == fresh[a].lcm) {
            class_commutes = class_commutes || commuting[b];
            drop[b] = true;
          }
        if (class_commutes) drop[a] = true;
      }
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (drop[a] || commuting[a]) continue;
      fresh[a].seq = seq_++;
      pairs_.push_back(fresh[a]);
    }
    for (std::size_t i = 0; i < k; ++i)
      if (red_.active(i) && lh.divides(red_.lm(i))) red_.set_active(i, false);
    red_.add(std::move(h));
  }

  void report() {
    if (!opt_.progress) return;
    opt_.progress("gb: degree " + std::to_string(last_deg_) + ", basis " + std::to_string(red_.size()) + ", pairs " +
                  std::to_string(pairs_.size()));
  }

  const Algebra& A_;
  AlgebraPtr alg_;
  GbOptions opt_;
  std::array<std::int64_t, kMaxVars> weights_{};
  detail::ReducerSet red_;
  std::vector<Pair> pairs_;
  std::uint64_t seq_ = 0;
  std::size_t snapshot_ = 0;
  bool complete_ = true;
  std::int64_t last_deg_ = 0;
};

}  // namespace

GroebnerBasis make_reduced(const AlgebraPtr& a, std::vector<NcPoly> basis, bool complete) {
  std::vector<IPoly> polys;
  for (auto& b : basis) {
    if (b.is_zero()) continue;
    NcPoly h = b.alg().same_context(*a) ? b : b.in_algebra(a);
    polys.push_back(detail::to_ipoly(h));
  }
  const auto& ord = a->ordering();
  std::stable_sort(polys.begin(), polys.end(),
                   [&](const IPoly& x, const IPoly& y) { return ord.cmp(x.front().m, y.front().m) < 0; });
  std::vector<IPoly> minimal;
  for (auto& p : polys) {
    bool redundant = false;
    for (const auto& q : minimal)
      if (q.front().m.divides(p.front().m)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<NcPoly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    detail::ReducerSet others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.add(minimal[j]);
    IPoly tail(minimal[i].begin() + 1, minimal[i].end());
    Rational scale = 1;
    IPoly r = tail.empty() ? tail : detail::reduce(*a, std::move(tail), others, true, &scale);
    IPoly full;
    full.reserve(r.size() + 1);
    ITerm head = minimal[i].front();
    head.c *= scale.get_num();
    for (auto& t : r) t.c *= scale.get_den();
    full.push_back(std::move(head));
    for (auto& t : r) full.push_back(std::move(t));
    out.push_back(detail::to_ncpoly(a, full).monic());
  }
  return GroebnerBasis(a, std::move(out), true, complete);
}

GroebnerBasis buchberger(const AlgebraPtr& a, const std::vector<NcPoly>& gens, const GbOptions& opt) {
  Engine e(a, opt);
  e.add_generators(gens);
  e.run_batched();
  return e.finish();
}

GroebnerBasis buchberger_serial(const AlgebraPtr& a, const std::vector<NcPoly>& gens, const GbOptions& opt) {
  Engine e(a, opt);
  e.add_generators(gens);
  e.run_serial();
  return e.finish();
}

MonOrdering elimination_ordering(const Algebra& a, const std::vector<int>& drop) {
  const int n = a.nvars();
  std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
  for (int v : drop) {
    if (v < 0 || v >= n) throw InvalidArgument("eliminate: generator index out of range");
    row[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<MonOrdering> candidates;
  if (a.ordering().is_global()) candidates.push_back(MonOrdering::matrix(n, {row}, a.ordering()));
  candidates.push_back(MonOrdering::elimination(n, drop));
  std::string why;
  for (auto& c : candidates) {
    auto b = a.with_ordering(c);
    auto d = validate_presentation(*b);
    if (d.ok) return c;
    why = d.message;
  }
  throw NoAdmissibleEliminationOrdering("no admissible elimination ordering: " + why);
}

EliminationResult eliminate(const std::vector<NcPoly>& gens, const MonOrdering& ord, const std::vector<int>& drop,
                            const GbOptions& opt) {
  if (gens.empty()) throw InvalidArgument("eliminate: empty generator list");
  auto b = gens.front().alg().with_ordering(ord);
  auto d = validate_presentation(*b);
  if (!d.ok) throw NoAdmissibleEliminationOrdering(d.message);
  std::uint32_t mask = 0;
  for (int v : drop) mask |= 1u << v;
  EliminationResult res;
  res.gb = buchberger(b, gens, opt);
  for (const auto& g : res.gb.elements())
    if ((g.support() & mask) == 0) res.kept.push_back(g);
  return res;
}

EliminationResult eliminate(const std::vector<NcPoly>& gens, const std::vector<int>& drop, const GbOptions& opt) {
  if (gens.empty()) throw InvalidArgument("eliminate: empty generator list");
  return eliminate(gens, elimination_ordering(gens.front().alg(), drop), drop, opt);
}

GroebnerBasis two_sided_gb(const AlgebraPtr& a, const std::vector<NcPoly>& gens, const GbOptions& opt) {
  GroebnerBasis g = buchberger(a, gens, opt);
  for (;;) {
    std::vector<NcPoly> extra;
    for (const auto& e : g.elements())
      for (int v = 0; v < a->nvars(); ++v) {
        NcPoly r = g.normal_form(mul_term_right(e, Rational(1), Mono::var(v)));
        if (!r.is_zero()) extra.push_back(std::move(r));
      }
    if (extra.empty()) return g;
    std::vector<NcPoly> all = g.elements();
    all.insert(all.end(), extra.begin(), extra.end());
    g = buchberger(a, all, opt);
  }
}

}  // namespace bfun
