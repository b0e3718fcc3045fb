#pragma once

// Integer-coefficient kernel shared by the reducers. Polynomials are term
// vectors sorted descending under the owning algebra's ordering.

#include <vector>

#include "bfun/algebra.hpp"
#include "bfun/poly.hpp"

namespace bfun::detail {

using IPoly = std::vector<ITerm>;

/// Clears denominators and divides by the content; lc > 0. Returns the
/// rational factor k with result = k * p.
IPoly to_ipoly(const NcPoly& p, Rational* factor = nullptr);
NcPoly to_ncpoly(const AlgebraPtr& a, const IPoly& p, const Rational& scale = Rational(1));

/// Divides by the content and makes lc positive; returns the divisor.
Integer make_primitive(IPoly& p);

/// q * g for a monomial q (left multiplication), sorted.
IPoly mul_mono_left(const Algebra& a, const Mono& q, const IPoly& g);
/// g * q.
IPoly mul_mono_right(const Algebra& a, const IPoly& g, const Mono& q);
IPoly mul(const Algebra& a, const IPoly& f, const IPoly& g);

/// a*f - b*g (both sorted), optionally skipping the first `skip_f` and
/// `skip_g` terms.
IPoly axpy(const MonOrdering& ord, const Integer& a, const IPoly& f, std::size_t skip_f, const Integer& b,
           const IPoly& g, std::size_t skip_g);

/// Reducer list with support masks for a cheap divisibility prefilter.
/// Reducers are tried in insertion order.
class ReducerSet {
 public:
  void add(IPoly p);
  void set_active(std::size_t i, bool on) { active_[i] = on; }
  bool active(std::size_t i) const { return active_[i]; }
  std::size_t size() const { return polys_.size(); }
  const IPoly& poly(std::size_t i) const { return polys_[i]; }
  const Mono& lm(std::size_t i) const { return lms_[i]; }

  /// First active reducer whose lm divides m, or -1.
  long find_divisor(const Mono& m) const {
    const std::uint32_t s = m.support();
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (!active_[i] || (masks_[i] & ~s)) continue;
      if (lms_[i].divides(m)) return static_cast<long>(i);
    }
    return -1;
  }

 private:
  std::vector<IPoly> polys_;
  std::vector<Mono> lms_;
  std::vector<std::uint32_t> masks_;
  std::vector<bool> active_;
};

/// Fraction-free reduction. On return, r = scale * p modulo the left ideal
/// of `g`. With full = false only the head is reduced.
IPoly reduce(const Algebra& a, IPoly p, const ReducerSet& g, bool full, Rational* scale = nullptr);

}  // namespace bfun::detail
