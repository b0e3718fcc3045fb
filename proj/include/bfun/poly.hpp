#pragma once

#include <string>
#include <vector>

#include "bfun/algebra.hpp"
#include "bfun/rational.hpp"

namespace bfun {

struct Term {
  Rational c;
  Mono m;
};

/// Element of a G-algebra: nonzero terms, distinct monomials, strictly
/// descending under the algebra's ordering.
class NcPoly {
 public:
  NcPoly() = default;
  explicit NcPoly(AlgebraPtr a) : alg_(std::move(a)) {}

  static NcPoly constant(AlgebraPtr a, const Rational& c);
  static NcPoly variable(AlgebraPtr a, int i);
  static NcPoly monomial(AlgebraPtr a, const Rational& c, const Mono& m);
  /// Arbitrary terms: combines duplicates, drops zeros, sorts.
  static NcPoly from_terms(AlgebraPtr a, std::vector<Term> terms);
  /// Trusted: terms already distinct, nonzero and descending.
  static NcPoly from_sorted(AlgebraPtr a, std::vector<Term> terms);
  static NcPoly from_bag(AlgebraPtr a, const TermBag& bag);

  const AlgebraPtr& algebra() const { return alg_; }
  const Algebra& alg() const { return *alg_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  const Mono& lm() const;
  const Rational& lc() const;
  int total_degree() const;
  std::uint32_t support() const;

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Rational& c);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Rational& c) { return a *= c; }
  friend NcPoly operator*(const Rational& c, NcPoly a) { return a *= c; }

  /// Exact equality of term sequences in a common presentation.
  friend bool operator==(const NcPoly& a, const NcPoly& b);

  NcPoly monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  NcPoly primitive() const;
  /// Re-sorted under another algebra sharing the presentation.
  NcPoly in_algebra(AlgebraPtr other) const;
  /// Same exponent vectors read in another algebra with at least as many
  /// generators. Meaningful when the supports commute in both.
  NcPoly transfer(AlgebraPtr other) const;

  std::string to_string() const;

 private:
  AlgebraPtr alg_;
  std::vector<Term> terms_;
};

/// Throws AlgebraMismatch unless the two share a presentation and ordering.
void require_same_context(const NcPoly& a, const NcPoly& b);

NcPoly multiply(const NcPoly& p, const NcPoly& q);
inline NcPoly operator*(const NcPoly& p, const NcPoly& q) { return multiply(p, q); }
NcPoly power(const NcPoly& p, unsigned k);

/// pq - qp. Commuting term pairs are skipped.
NcPoly lie_bracket(const NcPoly& p, const NcPoly& q);
/// pq - k qp.
NcPoly skew_bracket(const NcPoly& p, const NcPoly& q, const Rational& k);

/// c m p and p c m.
NcPoly mul_term_left(const Rational& c, const Mono& m, const NcPoly& p);
NcPoly mul_term_right(const NcPoly& p, const Rational& c, const Mono& m);

/// Commutative partial derivative in generator i. The support of f must
/// consist of pairwise commuting generators.
NcPoly partial(const NcPoly& f, int i);

/// Sorts and merges a raw term list under `ord`; zeros removed.
void normalize_terms(std::vector<Term>& t, const MonOrdering& ord);

std::string mono_to_string(const Algebra& a, const Mono& m);

}  // namespace bfun
