#include <algorithm>
#include <exception>
#include <unordered_map>

#include "bfun/errors.hpp"
#include "bfun/intersect.hpp"

namespace bfun {

namespace {

void monomials_of_degree(int r, int d, int i, Mono& cur, std::vector<Mono>& out) {
  if (i == r - 1) {
    cur[i] = static_cast<std::uint16_t>(d);
    out.push_back(cur);
    cur[i] = 0;
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[i] = static_cast<std::uint16_t>(e);
    monomials_of_degree(r, d - e, i + 1, cur, out);
  }
  cur[i] = 0;
}

struct Nf {
  detail::IPoly p;
  Rational k;  // p = k * NF(m(s))
};

}  // namespace

IntersectUpToResult intersect_up_to(const std::vector<NcPoly>& s0, const GroebnerBasis& J, int k,
                                    const IntersectUpToOptions& opt) {
  const int r = static_cast<int>(s0.size());
  if (r < 1) throw InvalidArgument("intersect_up_to: need at least one s");
  if (r > kMaxVars) throw InvalidArgument("intersect_up_to: too many s");
  const AlgebraPtr& A = J.algebra();
  std::vector<NcPoly> s;
  for (const auto& x : s0) {
    if (!x.alg().same_presentation(*A)) throw AlgebraMismatch("s and J live in different algebras");
    s.push_back(x.alg().same_context(*A) ? x : x.in_algebra(A));
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (!lie_bracket(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]).is_zero())
        throw InvalidArgument("intersect_up_to: the s must commute pairwise");

  std::vector<VarInfo> vars;
  for (int i = 0; i < r; ++i) {
    std::string name = i < static_cast<int>(opt.names.size()) ? opt.names[static_cast<std::size_t>(i)]
                                                               : "s" + std::to_string(i + 1);
    vars.push_back({name, VarRole::Plain, i});
  }
  IntersectUpToResult res;
  res.ring = Algebra::create(std::move(vars), {}, MonOrdering::degrevlex(r));
  const MonOrdering& ord = res.ring->ordering();

  std::vector<detail::IPoly> s_int(static_cast<std::size_t>(r));
  std::vector<Rational> ks(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) s_int[static_cast<std::size_t>(i)] = detail::to_ipoly(s[static_cast<std::size_t>(i)], &ks[static_cast<std::size_t>(i)]);

  const auto& red = J.reducers();
  std::unordered_map<Mono, Nf, MonoHash> cache;
  std::vector<Mono> items;
  std::vector<Mono> lms;
  DependencyBasis basis;

  for (int d = 0; d <= k; ++d) {
    std::vector<Mono> all, cand;
    Mono cur;
    monomials_of_degree(r, d, 0, cur, all);
    for (const auto& m : all)
      if (std::none_of(lms.begin(), lms.end(), [&](const Mono& l) { return l.divides(m); })) cand.push_back(m);
    if (cand.empty()) {
      res.complete = true;
      break;
    }
    std::sort(cand.begin(), cand.end(), [&](const Mono& a, const Mono& b) { return ord.cmp(a, b) < 0; });

    std::vector<Nf> nfs(cand.size());
    std::exception_ptr err;
    const long nc = static_cast<long>(cand.size());
#if defined(BFUN_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
#endif
    for (long c = 0; c < nc; ++c) {
      try {
        const Mono& m = cand[static_cast<std::size_t>(c)];
        Nf out;
        Rational scale = 1;
        if (d == 0) {
          out.p = detail::reduce(*A, detail::IPoly{{Integer(1), Mono{}}}, red, true, &scale);
          out.k = scale;
        } else {
          int i = 0;
          while (m[i] == 0) ++i;
          Mono pred = m;
          pred[i] -= 1;
          const Nf& base = cache.at(pred);
          out.k = base.k * ks[static_cast<std::size_t>(i)];
          if (!base.p.empty()) {
            out.p = detail::reduce(*A, detail::mul(*A, s_int[static_cast<std::size_t>(i)], base.p), red, true, &scale);
            out.k *= scale;
          }
        }
        if (!out.p.empty()) out.k /= Rational(detail::make_primitive(out.p));
        nfs[static_cast<std::size_t>(c)] = std::move(out);
      } catch (...) {
#if defined(BFUN_HAVE_OPENMP)
#pragma omp critical
#endif
        err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);

    for (std::size_t c = 0; c < cand.size(); ++c) {
      const std::size_t id = items.size();
      items.push_back(cand[c]);
      DependencyBasis::Combination comb(id + 1, Rational(0));
      comb[id] = nfs[c].k;
      auto dep = basis.add(nfs[c].p, std::move(comb));
      cache.emplace(cand[c], std::move(nfs[c]));
      if (!dep) continue;
      std::vector<Term> terms;
      for (std::size_t j = 0; j < dep->size(); ++j)
        if ((*dep)[j] != 0) terms.push_back({(*dep)[j], items[j]});
      NcPoly g = NcPoly::from_terms(res.ring, std::move(terms)).monic();
      lms.push_back(g.lm());
      res.basis.push_back(std::move(g));
      if (opt.principal) {
        res.complete = true;
        return res;
      }
    }
  }
  return res;
}

std::vector<UniPoly> solve_univariate_projections(const GroebnerBasis& I) {
  const AlgebraPtr& R = I.algebra();
  if (!R->is_commutative()) throw InvalidArgument("solve_univariate_projections: ring must be commutative");
  if (!vdim(I).finite) throw NotZeroDimensional("the ideal is not zero-dimensional");
  std::vector<UniPoly> out;
  for (int i = 0; i < R->nvars(); ++i) out.push_back(principal_intersect(NcPoly::variable(R, i), I));
  return out;
}

std::vector<UniPoly> solve_univariate_projections(const AlgebraPtr& ring, const std::vector<NcPoly>& gens) {
  return solve_univariate_projections(buchberger(ring, gens));
}

}  // namespace bfun
