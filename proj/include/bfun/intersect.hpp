#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bfun/groebner.hpp"
#include "bfun/unipoly.hpp"

namespace bfun {

/// Incremental exact linear dependency search. Each added vector carries a
/// combination over "items" (powers of s, or monomials in s_1..s_r) that
/// produces it; when a vector reduces to zero the combination is returned.
///
/// Rows are integer and primitive, pivot = smallest column, and no row
/// contains another row's pivot.
class DependencyBasis {
 public:
  using Combination = std::vector<Rational>;  // indexed by item id

  /// Adds `factor * v` where v has coordinates in standard monomials. On a
  /// dependency, returns the combination of items that vanishes and leaves
  /// the basis unchanged.
  std::optional<Combination> add(const detail::IPoly& v, Combination comb);

  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return cols_.size(); }
  /// Checks the row invariants (used by tests).
  bool consistent() const;

 private:
  struct Row {
    std::vector<std::pair<int, Integer>> v;
    Combination comb;
  };
  int column(const Mono& m);

  std::unordered_map<Mono, int, MonoHash> cols_;
  std::vector<Row> rows_;
  std::unordered_map<int, std::size_t> pivot_row_;
};

struct PrincipalOptions {
  /// Largest degree tried; CapExceeded beyond it.
  int cap = 200;
  enum class Recurrence {
    Left,    // r_{i+1} = NF(s r_i)
    Bracket  // r_{i+1} = NF([s^i - r_i, r_1] + r_i r_1), or NF(r_i r_1) when commutative
  } recurrence = Recurrence::Left;
  std::function<void(const std::string&)> progress;
};

/// Monic generator of J ∩ K[s]. Throws ProvablyZero when the leading
/// monomials already exclude every power of lm(s), CapExceeded when no
/// dependency is found up to the cap.
UniPoly principal_intersect(const NcPoly& s, const GroebnerBasis& J, const PrincipalOptions& opt = {});

/// Normal forms r_i = NF(s^i, J), i = 0..d, by the chosen recurrence.
std::vector<NcPoly> power_normal_forms(const NcPoly& s, const GroebnerBasis& J, int d,
                                       PrincipalOptions::Recurrence rec = PrincipalOptions::Recurrence::Left);

enum class ZeroTest { ProvablyZero, Inconclusive };
ZeroTest detect_zero_intersection(const NcPoly& s, const GroebnerBasis& J);

struct IntersectUpToOptions {
  /// Stop at the first element found (the caller knows the intersection is principal).
  bool principal = false;
  /// Names of s_1..s_r in the result ring; s1..sr by default.
  std::vector<std::string> names;
  bool parallel = false;
};

struct IntersectUpToResult {
  AlgebraPtr ring;             // K[s_1..s_r], degrevlex
  std::vector<NcPoly> basis;   // monic, ascending leading monomials
  /// Set when the candidate set ran empty (zero-dimensional intersection)
  /// or the principal flag stopped the search.
  bool complete = false;
};

/// Reduced Gröbner basis of J ∩ K[s_1..s_r] up to degree k (degrevlex on the s).
IntersectUpToResult intersect_up_to(const std::vector<NcPoly>& s, const GroebnerBasis& J, int k,
                                    const IntersectUpToOptions& opt = {});

/// Monic generators of I ∩ K[x_i] for every generator x_i of a commutative
/// ring. Throws NotZeroDimensional unless vdim is finite.
std::vector<UniPoly> solve_univariate_projections(const GroebnerBasis& I);
std::vector<UniPoly> solve_univariate_projections(const AlgebraPtr& ring, const std::vector<NcPoly>& gens);

}  // namespace bfun
