#pragma once

#include <string>
#include <vector>

#include "bfun/groebner.hpp"
#include "bfun/poly.hpp"

namespace bfun {

// ---------------------------------------------------------------------------
// Algebras. Generators are laid out as (t, x, Dx, Dt, s or s_ij, h).

/// Commutative K[names] under degrevlex.
AlgebraPtr make_polynomial_ring(const std::vector<std::string>& names);
/// x1..xn names for n generators.
std::vector<std::string> default_names(int n);

/// D_n: x-names given, derivatives named D<name>.
AlgebraPtr make_weyl(const std::vector<std::string>& x);
AlgebraPtr make_weyl(int n);
/// D_n[s_1..s_p] with central s.
AlgebraPtr make_weyl_s(const std::vector<std::string>& x, int p);
/// D_n ⊗ S_p: generators x, Dx, Dt_1..Dt_p, s_1..s_p with Dt_j s_j = s_j Dt_j - Dt_j.
AlgebraPtr make_bm_algebra(const std::vector<std::string>& x, int p);
/// D_n ⊗ D_r in (t, x, Dx, Dt).
AlgebraPtr make_malgrange_algebra(const std::vector<std::string>& x, int r);
/// D_n<Dt, S>: generators x, Dx, Dt_1..Dt_r, s_i_j (row major).
AlgebraPtr make_var_ann_algebra(const std::vector<std::string>& x, int r);
/// D_n<S> (no Dt), the target of the variety annihilator.
AlgebraPtr make_gl_weyl_algebra(const std::vector<std::string>& x, int r);
/// U(sl2) on e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
AlgebraPtr make_usl2();

/// Adds a trailing generator h and homogenizes every tail d_ij to
/// weighted degree wt_i + wt_j (weights per generator, positive integers).
/// The ordering is the homogenized ordering of `base` for the row (wt, 1).
AlgebraPtr make_homogenized(const AlgebraPtr& a, const std::vector<std::int64_t>& wt, const MonOrdering& base);

/// Name suffixes used by the constructors.
std::string shift_name(int j, int p);   // Dt or Dt<j+1>
std::string s_name(int j, int p);       // s or s<j+1>
std::string t_name(int j, int r);       // t or t<j+1>

// ---------------------------------------------------------------------------
// Weights.

/// Weighted degree of a monomial for an integer weight per generator.
std::int64_t weighted_degree(const Mono& m, const std::vector<std::int64_t>& wt);
Rational weighted_degree(const Mono& m, const std::vector<Rational>& wt);

/// Per-generator weights from the V-filtration vector w (indexed like the
/// x/t generators, in algebra order): -w on x,t and +w on Dx,Dt, 0 elsewhere.
std::vector<Rational> vfiltration_weights(const Algebra& a, const std::vector<Rational>& w);

/// Terms of maximal weighted degree; in(0) = 0.
NcPoly initial_form(const NcPoly& p, const std::vector<Rational>& wt);

/// H(p) = sum c h^{deg(p) - wt(term)} term, in the homogenized algebra.
NcPoly homogenize(const NcPoly& p, const AlgebraPtr& homogenized, const std::vector<std::int64_t>& wt);
/// h = 1; the result lives in `target` (generators 0..n-1 of the homogenized algebra).
NcPoly dehomogenize(const NcPoly& p, const AlgebraPtr& target);

/// Noro weights for the Malgrange ideal of f in (t, x, Dx, Dt): u = (deg f, û),
/// v = (1, deg f - û_i + 1), as one weight per generator.
std::vector<std::int64_t> noro_weights(const Algebra& malgrange, const NcPoly& f_in_x,
                                       const std::vector<std::int64_t>& uhat);
/// The same for an r-tuple: t_k gets d_k = deg_û f_k, Dt_k gets c - d_k and
/// Dx_m gets c - û_m, where c = max(d_k, û_m) + 1. Every generator of the
/// Malgrange ideal is then homogeneous up to the weighted degree of its terms.
std::vector<std::int64_t> noro_weights(const Algebra& malgrange, const std::vector<NcPoly>& f,
                                       const std::vector<std::int64_t>& uhat);

/// Smallest positive integer weights on x making every f_k quasi-homogeneous,
/// when the solution space is one-dimensional; empty otherwise.
std::vector<std::int64_t> quasi_homogeneous_weights(const std::vector<NcPoly>& f);

// ---------------------------------------------------------------------------
// Ideals.

/// Copies f (in K[x] with n generators) into `a`, mapping generator i to the
/// X-role generator with index i.
NcPoly embed_x(const NcPoly& f, const AlgebraPtr& a);

/// Copies p into `target`, matching generators by (role, i, j). Throws
/// InvalidArgument when a used generator has no counterpart or when two
/// non-commuting generators would swap their relative order.
NcPoly map_roles(const NcPoly& p, const AlgebraPtr& target);
/// Generator index map for map_roles (-1 where absent).
std::vector<int> role_map(const Algebra& from, const Algebra& to);

struct DIdeal {
  AlgebraPtr algebra;
  std::vector<NcPoly> gens;
};

/// {t_i - f_i} ∪ {Dx_m + sum_j df_j/dx_m Dt_j} in D_n ⊗ D_r.
DIdeal malgrange_ideal(const std::vector<NcPoly>& f);
/// {s_j + f_j Dt_j} ∪ {Dx_m + sum_j df_j/dx_m Dt_j} in D_n ⊗ S_p.
DIdeal bm_ideal(const std::vector<NcPoly>& f);
/// {s_ij + Dt_i f_j} ∪ {Dx_m + sum_k df_k/dx_m Dt_k} in D_n<Dt, S>.
DIdeal var_ann_ideal(const std::vector<NcPoly>& f);

struct InitialIdealOptions {
  /// Global ordering on the original algebra; degrevlex when unset.
  std::optional<MonOrdering> base;
  GbOptions gb;
  bool check_holonomic = false;
};

/// Gröbner basis of in_(-w,w)(I) with respect to the base ordering, via a
/// Gröbner basis of the weighted homogenization. `w` has one entry per
/// generator of the algebra (the full (-w,w) vector), `hw` the positive
/// homogenization weights (u on x,t and v on Dx,Dt).
GroebnerBasis initial_ideal(const DIdeal& I, const std::vector<Rational>& w, const std::vector<std::int64_t>& hw,
                            const InitialIdealOptions& opt = {});

// ---------------------------------------------------------------------------
// The f^s action.

/// N / prod f_j^{k_j} * f^s with N in K[x, s_1..s_r].
struct FsElement {
  NcPoly num;
  std::vector<int> den;
  bool is_zero() const { return num.is_zero(); }
};

class FsModule {
 public:
  /// f: commutative polynomials in a common ring with n generators.
  explicit FsModule(const std::vector<NcPoly>& f);

  const AlgebraPtr& ring() const { return ring_; }
  int n() const { return n_; }
  int r() const { return static_cast<int>(f_.size()); }

  /// The symbol f^s itself.
  FsElement unit() const;
  /// P • e for P in any algebra whose generators carry D-module roles
  /// (X, Dx, T, Dt, S, Sij) indexed consistently with f.
  FsElement apply(const NcPoly& p, const FsElement& e) const;
  FsElement apply(const NcPoly& p) const { return apply(p, unit()); }

  std::string to_string(const FsElement& e) const;

 private:
  FsElement act(const VarInfo& v, const FsElement& e) const;
  void cancel(FsElement& e) const;
  NcPoly shift_s(const NcPoly& p, int j, int by) const;

  AlgebraPtr ring_;
  int n_ = 0;
  std::vector<NcPoly> f_;
  std::vector<std::vector<NcPoly>> df_;  // df_[m][j] = d f_j / d x_m
};

/// Convenience: P • f^s.
FsElement apply_to_fs(const NcPoly& p, const std::vector<NcPoly>& f);

/// Exact quotient a / b in a commutative ring, or nullopt if b does not divide a.
std::optional<NcPoly> divide_exact(const NcPoly& a, const NcPoly& b);

}  // namespace bfun
