#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bfun/monomial.hpp"
#include "bfun/ordering.hpp"
#include "bfun/rational.hpp"

namespace bfun {

/// What a generator stands for. The D-module constructors tag their
/// generators so that the f^s action and weight vectors can find them.
enum class VarRole { Plain, X, Dx, T, Dt, S, Sij, H };

struct VarInfo {
  std::string name;
  VarRole role = VarRole::Plain;
  int i = -1;  // x_i, Dx_i, t_i, Dt_i, s_i, or the row of s_ij
  int j = -1;  // column of s_ij
};

/// Integer-coefficient term; structure constants of every supported algebra
/// are integral, so monomial products never leave the integers.
struct ITerm {
  Integer c;
  Mono m;
};
using TermBag = std::vector<ITerm>;

/// x_j x_i = x_i x_j + tail, for i < j.
struct Relation {
  int i = 0;
  int j = 0;
  TermBag tail;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

namespace detail {
class Presentation;
}

/// A G-algebra of Lie type: generators, commutation tails d_ij and a
/// monomial ordering. Values are immutable; the product caches inside the
/// shared presentation are internally synchronized.
class Algebra {
 public:
  /// Builds the presentation. Does not validate it; see validate_presentation.
  static AlgebraPtr create(std::vector<VarInfo> vars, std::vector<Relation> relations, MonOrdering ordering);

  /// Same presentation (and shared product caches) under another ordering.
  AlgebraPtr with_ordering(MonOrdering ordering) const;

  int nvars() const;
  const VarInfo& var(int i) const;
  const std::string& name(int i) const { return var(i).name; }
  std::optional<int> find(std::string_view name) const;
  std::optional<int> find_role(VarRole role, int i = -1, int j = -1) const;
  std::vector<int> vars_with_role(VarRole role) const;
  const MonOrdering& ordering() const { return ordering_; }

  bool commute(int i, int j) const;
  /// d_ij for i < j (empty when x_i, x_j commute).
  const TermBag& tail(int i, int j) const;
  bool is_commutative() const;
  /// Bitmask of generators commuting with every generator.
  std::uint32_t central_mask() const;

  bool same_presentation(const Algebra& other) const { return presentation_ == other.presentation_; }
  bool same_context(const Algebra& other) const {
    return this == &other || (same_presentation(other) && ordering_ == other.ordering_);
  }

  /// Product of two standard monomials as a duplicate-free bag of standard
  /// monomials with nonzero integer coefficients.
  TermBag multiply(const Mono& a, const Mono& b) const;

  /// True iff some generator in `b` must pass a non-commuting generator of
  /// `a`, i.e. the product is not just exponent addition.
  bool product_is_nontrivial(const Mono& a, const Mono& b) const;
  /// Generators b_k for which a * b_k is nontrivial: the product a * m is
  /// nontrivial iff support(m) meets this mask.
  std::uint32_t nontrivial_mask(const Mono& a) const;

 private:
  Algebra(std::shared_ptr<const detail::Presentation> p, MonOrdering ordering)
      : presentation_(std::move(p)), ordering_(std::move(ordering)) {}

  std::shared_ptr<const detail::Presentation> presentation_;
  MonOrdering ordering_;
};

/// Outcome of validate_presentation.
struct PresentationDiagnostics {
  bool ok = true;
  std::string message;
  enum class Failure { None, Nondegeneracy, Ordering, Nonglobal } failure = Failure::None;
  int i = -1, j = -1, k = -1;
};

/// Checks the nondegeneracy identity for all i<j<k and lm(d_ij) ≺ x_i x_j.
PresentationDiagnostics validate_presentation(const Algebra& a);
/// Same, throwing NondegeneracyViolated / OrderingInadmissible / NonGlobalOrdering.
void require_valid_presentation(const Algebra& a);

}  // namespace bfun
