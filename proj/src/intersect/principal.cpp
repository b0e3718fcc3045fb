#include "bfun/errors.hpp"
#include "bfun/intersect.hpp"

namespace bfun {

ZeroTest detect_zero_intersection(const NcPoly& s, const GroebnerBasis& J) {
  if (s.is_zero()) return ZeroTest::Inconclusive;
  const std::uint32_t sup = s.lm().support();
  for (const auto& m : J.leading())
    if ((m.support() & ~sup) == 0) return ZeroTest::Inconclusive;
  return ZeroTest::ProvablyZero;
}

namespace {

NcPoly in_context(const NcPoly& s, const GroebnerBasis& J) {
  if (!s.alg().same_presentation(*J.algebra())) throw AlgebraMismatch("s and J live in different algebras");
  return s.alg().same_context(*J.algebra()) ? s : s.in_algebra(J.algebra());
}

// Integer form of r_{i+1} from (P_i, k_i) with P_i = k_i NF(s^i):
// returns P_{i+1} primitive and updates k.
detail::IPoly step_left(const Algebra& a, const detail::IPoly& s_int, const Rational& ks, const detail::IPoly& p,
                        Rational& k, const detail::ReducerSet& red) {
  if (p.empty()) return {};
  Rational scale = 1;
  auto r = detail::reduce(a, detail::mul(a, s_int, p), red, true, &scale);
  if (r.empty()) return r;
  Integer g = detail::make_primitive(r);
  k = k * ks * scale / Rational(g);
  return r;
}

}  // namespace

std::vector<NcPoly> power_normal_forms(const NcPoly& s0, const GroebnerBasis& J, int d,
                                       PrincipalOptions::Recurrence rec) {
  const NcPoly s = in_context(s0, J);
  const AlgebraPtr& A = J.algebra();
  std::vector<NcPoly> out;
  out.push_back(J.normal_form(NcPoly::constant(A, 1)));
  if (d < 1) return out;
  if (rec == PrincipalOptions::Recurrence::Left) {
    Rational ks;
    auto s_int = detail::to_ipoly(s, &ks);
    Rational k;
    auto p = detail::to_ipoly(out[0], &k);
    for (int i = 1; i <= d; ++i) {
      p = step_left(*A, s_int, ks, p, k, J.reducers());
      out.push_back(detail::to_ncpoly(A, p, Rational(1) / k));
    }
    return out;
  }
  const NcPoly r1 = out.emplace_back(J.normal_form(s));
  const bool comm = A->is_commutative();
  NcPoly si = s;
  for (int i = 1; i < d; ++i) {
    const NcPoly ri = out[static_cast<std::size_t>(i)];
    NcPoly next = ri * r1;
    if (!comm) next += lie_bracket(si - ri, r1);
    out.push_back(J.normal_form(next));
    if (!comm && i + 1 < d) si = s * si;
  }
  return out;
}

UniPoly principal_intersect(const NcPoly& s0, const GroebnerBasis& J, const PrincipalOptions& opt) {
  const NcPoly s = in_context(s0, J);
  if (s.is_zero()) throw InvalidArgument("principal_intersect: s must be nonzero");
  if (J.is_unit()) return UniPoly::constant(1);
  if (s.is_constant()) throw ProvablyZero("s is a nonzero constant and J is proper");
  if (detect_zero_intersection(s, J) == ZeroTest::ProvablyZero)
    throw ProvablyZero("no leading monomial of J divides a power of lm(s)");
  const AlgebraPtr& A = J.algebra();
  const auto& red = J.reducers();

  DependencyBasis basis;
  auto found = [](DependencyBasis::Combination comb) { return UniPoly(std::move(comb)).monic(); };
  auto unit_comb = [](int i, const Rational& k) {
    DependencyBasis::Combination c(static_cast<std::size_t>(i + 1), Rational(0));
    c[static_cast<std::size_t>(i)] = k;
    return c;
  };

  if (opt.recurrence == PrincipalOptions::Recurrence::Left) {
    Rational ks;
    auto s_int = detail::to_ipoly(s, &ks);
    Rational k = 1;
    detail::IPoly p{{Integer(1), Mono{}}};
    {
      Rational sc = 1;
      p = detail::reduce(*A, p, red, true, &sc);
      Integer g = p.empty() ? Integer(1) : detail::make_primitive(p);
      k = sc / Rational(g);
    }
    for (int i = 0; i <= opt.cap; ++i) {
      if (i > 0) p = step_left(*A, s_int, ks, p, k, red);
      if (auto dep = basis.add(p, unit_comb(i, k))) return found(std::move(*dep));
      if (opt.progress)
        opt.progress("degree " + std::to_string(i) + ": " + std::to_string(p.size()) + " terms, " +
                     std::to_string(basis.columns()) + " columns");
    }
  } else {
    const bool comm = A->is_commutative();
    NcPoly r1, ri, si = s;
    for (int i = 0; i <= opt.cap; ++i) {
      if (i == 0)
        ri = J.normal_form(NcPoly::constant(A, 1));
      else if (i == 1)
        ri = r1 = J.normal_form(s);
      else {
        NcPoly next = ri * r1;
        if (!comm) next += lie_bracket(si - ri, r1);
        if (!comm) si = s * si;
        ri = J.normal_form(next);
      }
      Rational k;
      auto p = detail::to_ipoly(ri, &k);
      if (auto dep = basis.add(p, unit_comb(i, k))) return found(std::move(*dep));
      if (opt.progress) opt.progress("degree " + std::to_string(i) + ": " + std::to_string(ri.size()) + " terms");
    }
  }
  throw CapExceeded("no element of J in K[s] up to degree " + std::to_string(opt.cap));
}

}  // namespace bfun
