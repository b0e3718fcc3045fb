#include "bfun/poly.hpp"

#include <algorithm>

#include "bfun/errors.hpp"

namespace bfun {

void normalize_terms(std::vector<Term>& t, const MonOrdering& ord) {
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i + 1;
    Rational c = std::move(t[i].c);
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

NcPoly NcPoly::constant(AlgebraPtr a, const Rational& c) { return monomial(std::move(a), c, Mono{}); }

NcPoly NcPoly::variable(AlgebraPtr a, int i) {
  if (i < 0 || i >= a->nvars()) throw InvalidArgument("generator index out of range");
  return monomial(std::move(a), Rational(1), Mono::var(i));
}

NcPoly NcPoly::monomial(AlgebraPtr a, const Rational& c, const Mono& m) {
  NcPoly p(std::move(a));
  if (c != 0) p.terms_.push_back({c, m});
  return p;
}

NcPoly NcPoly::from_terms(AlgebraPtr a, std::vector<Term> terms) {
  NcPoly p(std::move(a));
  normalize_terms(terms, p.alg_->ordering());
  p.terms_ = std::move(terms);
  return p;
}

NcPoly NcPoly::from_sorted(AlgebraPtr a, std::vector<Term> terms) {
  NcPoly p(std::move(a));
  p.terms_ = std::move(terms);
  return p;
}

NcPoly NcPoly::from_bag(AlgebraPtr a, const TermBag& bag) {
  std::vector<Term> t;
  t.reserve(bag.size());
  for (const auto& b : bag) t.push_back({Rational(b.c), b.m});
  return from_terms(std::move(a), std::move(t));
}

const Mono& NcPoly::lm() const {
  if (terms_.empty()) throw InvalidArgument("lm of zero polynomial");
  return terms_.front().m;
}

const Rational& NcPoly::lc() const {
  if (terms_.empty()) throw InvalidArgument("lc of zero polynomial");
  return terms_.front().c;
}

int NcPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.total_degree());
  return d;
}

std::uint32_t NcPoly::support() const {
  std::uint32_t s = 0;
  for (const auto& t : terms_) s |= t.m.support();
  return s;
}

void require_same_context(const NcPoly& a, const NcPoly& b) {
  if (!a.algebra() || !b.algebra()) throw AlgebraMismatch("polynomial without an algebra");
  if (!a.alg().same_context(b.alg())) throw AlgebraMismatch("operands live in different algebras or orderings");
}

NcPoly NcPoly::operator-() const {
  NcPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign, const MonOrdering& ord) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ord.cmp(a[i].m, b[j].m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({sign > 0 ? b[j].c : Rational(-b[j].c), b[j].m});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].c + b[j].c) : Rational(a[i].c - b[j].c);
      if (s != 0) out.push_back({std::move(s), a[i].m});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({sign > 0 ? b[j].c : Rational(-b[j].c), b[j].m});
  return out;
}

}  // namespace

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  if (!alg_) alg_ = o.alg_;
  if (o.is_zero()) return *this;
  require_same_context(*this, o);
  terms_ = merge(terms_, o.terms_, 1, alg_->ordering());
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  if (!alg_) alg_ = o.alg_;
  if (o.is_zero()) return *this;
  require_same_context(*this, o);
  terms_ = merge(terms_, o.terms_, -1, alg_->ordering());
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= c;
  return *this;
}

bool operator==(const NcPoly& a, const NcPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (!a.alg_->same_presentation(*b.alg_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

NcPoly NcPoly::monic() const {
  if (is_zero()) return *this;
  NcPoly r = *this;
  Rational inv = 1 / lc();
  for (auto& t : r.terms_) t.c *= inv;
  return r;
}

NcPoly NcPoly::primitive() const {
  if (is_zero()) return *this;
  std::vector<Rational> cs;
  cs.reserve(terms_.size());
  for (const auto& t : terms_) cs.push_back(t.c);
  Integer den = common_denominator(cs);
  for (auto& c : cs) c *= den;
  Integer g = numerator_gcd(cs);
  if (lc() < 0) g = -g;
  NcPoly r = *this;
  Rational scale = Rational(den) / Rational(g);
  for (auto& t : r.terms_) t.c *= scale;
  return r;
}

NcPoly NcPoly::in_algebra(AlgebraPtr other) const {
  if (alg_ && !alg_->same_presentation(*other)) throw AlgebraMismatch("in_algebra: different presentation");
  return from_terms(std::move(other), terms_);
}

NcPoly NcPoly::transfer(AlgebraPtr other) const {
  for (const auto& t : terms_)
    for (int i = other->nvars(); i < kMaxVars; ++i)
      if (t.m[i]) throw AlgebraMismatch("transfer: target algebra has too few generators");
  return from_terms(std::move(other), terms_);
}

std::string mono_to_string(const Algebra& a, const Mono& m) {
  std::string s;
  for (int i = 0; i < a.nvars(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += a.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    Rational c = t.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (neg)
      s += '-';
    else if (k)
      s += '+';
    if (t.m.is_one()) {
      s += bfun::to_string(c);
    } else {
      if (c != 1) s += bfun::to_string(c) + '*';
      s += mono_to_string(*alg_, t.m);
    }
  }
  return s;
}

NcPoly multiply(const NcPoly& p, const NcPoly& q) {
  require_same_context(p, q);
  if (p.is_zero() || q.is_zero()) return NcPoly(p.algebra());
  const Algebra& A = p.alg();
  std::vector<Term> out;
  out.reserve(p.size() * q.size());
  for (const auto& a : p.terms())
    for (const auto& b : q.terms()) {
      Rational ab = a.c * b.c;
      if (!A.product_is_nontrivial(a.m, b.m)) {
        out.push_back({std::move(ab), a.m * b.m});
        continue;
      }
      for (const auto& t : A.multiply(a.m, b.m)) out.push_back({ab * t.c, t.m});
    }
  return NcPoly::from_terms(p.algebra(), std::move(out));
}

NcPoly power(const NcPoly& p, unsigned k) {
  NcPoly r = NcPoly::constant(p.algebra(), 1);
  for (unsigned i = 0; i < k; ++i) r = multiply(r, p);
  return r;
}

NcPoly skew_bracket(const NcPoly& p, const NcPoly& q, const Rational& k) {
  require_same_context(p, q);
  const Algebra& A = p.alg();
  std::vector<Term> out;
  for (const auto& a : p.terms())
    for (const auto& b : q.terms()) {
      Rational ab = a.c * b.c;
      const bool fwd = A.product_is_nontrivial(a.m, b.m);
      const bool bwd = A.product_is_nontrivial(b.m, a.m);
      if (!fwd && !bwd && k == 1) continue;
      if (fwd)
        for (const auto& t : A.multiply(a.m, b.m)) out.push_back({ab * t.c, t.m});
      else
        out.push_back({ab, a.m * b.m});
      Rational kab = -k * ab;
      if (bwd)
        for (const auto& t : A.multiply(b.m, a.m)) out.push_back({kab * t.c, t.m});
      else
        out.push_back({kab, a.m * b.m});
    }
  return NcPoly::from_terms(p.algebra(), std::move(out));
}

NcPoly lie_bracket(const NcPoly& p, const NcPoly& q) { return skew_bracket(p, q, Rational(1)); }

NcPoly mul_term_left(const Rational& c, const Mono& m, const NcPoly& p) {
  const Algebra& A = p.alg();
  std::vector<Term> out;
  if (c == 0) return NcPoly(p.algebra());
  for (const auto& b : p.terms()) {
    Rational cb = c * b.c;
    if (!A.product_is_nontrivial(m, b.m)) {
      out.push_back({std::move(cb), m * b.m});
      continue;
    }
    for (const auto& t : A.multiply(m, b.m)) out.push_back({cb * t.c, t.m});
  }
  return NcPoly::from_terms(p.algebra(), std::move(out));
}

NcPoly mul_term_right(const NcPoly& p, const Rational& c, const Mono& m) {
  const Algebra& A = p.alg();
  std::vector<Term> out;
  if (c == 0) return NcPoly(p.algebra());
  for (const auto& a : p.terms()) {
    Rational ac = a.c * c;
    if (!A.product_is_nontrivial(a.m, m)) {
      out.push_back({std::move(ac), a.m * m});
      continue;
    }
    for (const auto& t : A.multiply(a.m, m)) out.push_back({ac * t.c, t.m});
  }
  return NcPoly::from_terms(p.algebra(), std::move(out));
}

NcPoly partial(const NcPoly& f, int i) {
  const Algebra& A = f.alg();
  if (i < 0 || i >= A.nvars()) throw InvalidArgument("partial: generator index out of range");
  std::uint32_t s = f.support() | (1u << i);
  for (int a = 0; a < A.nvars(); ++a)
    for (int b = a + 1; b < A.nvars(); ++b)
      if ((s >> a & 1u) && (s >> b & 1u) && !A.commute(a, b))
        throw NoncommutativeSupport("partial: " + A.name(a) + " and " + A.name(b) + " do not commute");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (!t.m[i]) continue;
    Mono m = t.m;
    m[i] = static_cast<std::uint16_t>(m[i] - 1);
    out.push_back({t.c * t.m[i], m});
  }
  // Lowering one exponent can reorder terms under weighted orderings.
  return NcPoly::from_terms(f.algebra(), std::move(out));
}

}  // namespace bfun
