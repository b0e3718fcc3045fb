#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "bfun/detail/ipoly.hpp"
#include "bfun/poly.hpp"

namespace bfun {

struct GbOptions {
  bool reduced = true;
  /// Pairs whose degree (first positive weight row, else total degree)
  /// exceeds the cap are skipped; the result is then flagged incomplete.
  std::optional<std::int64_t> degree_cap;
  /// Coprime leading monomials: reduce the Lie bracket instead of the S-polynomial.
  bool product_criterion = true;
  bool chain_criterion = true;
  /// Reduce S-polynomial tails during the run; otherwise only heads, with the
  /// tails cleaned up by the final interreduction.
  bool tail_reduction = true;
  /// Reduce each degree batch of pairs concurrently (OpenMP) against a
  /// snapshot of the basis. Results do not depend on this flag.
  bool parallel = false;
  std::function<void(const std::string&)> progress;
};

/// Left Gröbner basis with its algebra/ordering context. Elements are monic.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(AlgebraPtr a, std::vector<NcPoly> elements, bool reduced, bool complete);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<NcPoly>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool reduced() const { return reduced_; }
  /// False when a degree cap cut the computation short.
  bool complete() const { return complete_; }
  bool is_unit() const;
  std::vector<Mono> leading() const;

  /// Exact normal form: p - NF(p) lies in the ideal.
  NcPoly normal_form(const NcPoly& p) const;
  bool contains(const NcPoly& p) const { return normal_form(p).is_zero(); }
  const detail::ReducerSet& reducers() const { return *red_; }

 private:
  AlgebraPtr alg_;
  std::vector<NcPoly> elems_;
  std::shared_ptr<detail::ReducerSet> red_;
  bool reduced_ = false;
  bool complete_ = true;
};

/// Normal form with respect to an arbitrary generator list (first divisor
/// in list order). The list is used as is, it need not be a Gröbner basis.
NcPoly normal_form(const NcPoly& p, const std::vector<NcPoly>& g);

/// Left S-polynomial with integer-cleared coefficients.
NcPoly spoly(const NcPoly& f, const NcPoly& g);

/// Gröbner basis in the algebra `a` (generators are re-sorted into it).
GroebnerBasis buchberger(const AlgebraPtr& a, const std::vector<NcPoly>& gens, const GbOptions& opt = {});
/// One pair at a time, insertion after every reduction. Kept for testing the
/// batch kernel.
GroebnerBasis buchberger_serial(const AlgebraPtr& a, const std::vector<NcPoly>& gens, const GbOptions& opt = {});

/// Interreduces a list into a reduced Gröbner basis, assuming it already is one.
GroebnerBasis make_reduced(const AlgebraPtr& a, std::vector<NcPoly> basis, bool complete = true);

/// Elimination ordering candidates for dropping `drop`; the first admissible
/// one is used. Throws NoAdmissibleEliminationOrdering if none is.
MonOrdering elimination_ordering(const Algebra& a, const std::vector<int>& drop);

struct EliminationResult {
  GroebnerBasis gb;           // in the elimination ordering
  std::vector<NcPoly> kept;   // elements free of the dropped generators
};
EliminationResult eliminate(const std::vector<NcPoly>& gens, const std::vector<int>& drop,
                            const GbOptions& opt = {});
EliminationResult eliminate(const std::vector<NcPoly>& gens, const MonOrdering& elim_ordering,
                            const std::vector<int>& drop, const GbOptions& opt = {});

/// Left GB closed under right multiplication by the generators.
GroebnerBasis two_sided_gb(const AlgebraPtr& a, const std::vector<NcPoly>& gens, const GbOptions& opt = {});

struct VDim {
  bool finite = true;
  std::uint64_t value = 0;
};
VDim vdim(const GroebnerBasis& g);

/// Largest set of generators S with no lm supported inside S.
int monomial_dimension(const std::vector<Mono>& lms, int nvars);
/// GK dimension of A/I, computed from L(G) under a degree-compatible
/// ordering of the same presentation.
int gk_dimension(const AlgebraPtr& a, const std::vector<NcPoly>& gens);
int gk_dimension(const GroebnerBasis& g);
/// GK.dim(D/I) equals the number of x-variables (the Dx count).
bool is_holonomic(const AlgebraPtr& a, const std::vector<NcPoly>& gens);

/// Syzygies of commutative polynomials: generators of
/// {a : sum a_i F_i = 0}, via a module GB of (F_i, e_i) under
/// position-over-term with the F-component first.
std::vector<std::vector<NcPoly>> syzygy_module(const std::vector<NcPoly>& f);

}  // namespace bfun
