#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bfun/dmod.hpp"
#include "bfun/intersect.hpp"

namespace bfun {

// ---------------------------------------------------------------------------
// Roots.

/// Rational roots with multiplicities (sorted descending) and the remaining
/// factor without rational roots. prod (s - r)^m * residual = input.
struct BFactorization {
  std::vector<std::pair<Rational, int>> roots;
  UniPoly residual;

  /// "(s+1)^2*(s+5/6)" style; a non-unit residual is appended in parentheses.
  std::string to_string(const std::string& var = "s") const;
};

BFactorization rational_roots(const UniPoly& b);

// ---------------------------------------------------------------------------
// Annihilators.

/// Gröbner basis of an annihilator in D_n[s_1..s_p] or D_n<S>.
struct AnnResult {
  AlgebraPtr algebra;  // default (degrevlex) context of the target algebra
  GroebnerBasis gb;    // in the restriction of the elimination ordering
  const std::vector<NcPoly>& generators() const { return gb.elements(); }
};

struct AnnOptions {
  GbOptions gb;
  /// Elimination ordering on the ambient algebra; the documented default when unset.
  std::optional<MonOrdering> ordering;
};

/// Ann_{D_n[s]}(f^s) by eliminating Dt from the Briançon–Maisonobe ideal.
AnnResult annfs_bm(const NcPoly& f, const AnnOptions& opt = {});
/// Same ideal, seeded with the degree-one operators from Syz(f, df/dx_1, ..).
AnnResult annfs_syz(const NcPoly& f, const AnnOptions& opt = {});
/// Ann_{D_n[s_1..s_p]}(f_1^{s_1} .. f_p^{s_p}).
AnnResult annfs_bm_multi(const std::vector<NcPoly>& f, const AnnOptions& opt = {});

/// {t_j - f_j, Dx_m + sum df_k/dx_m Dt_k, s_j + f_j Dt_j} in the algebra on
/// (t, x, Dx, Dt, s) with [t_j, s_j] = t_j, [Dt_j, s_j] = -Dt_j, ordered so
/// that t ≫ x and {Dx, s} ≫ {x, Dt}. This set is already a left Gröbner basis.
DIdeal bm_extended_basis(const std::vector<NcPoly>& f);

/// Bernstein–Sato ideal (Ann + <f_1 .. f_p>) ∩ K[s_1..s_p] up to degree k.
IntersectUpToResult bs_ideal(const std::vector<NcPoly>& f, int k, bool principal = false,
                             const AnnOptions& opt = {});

// ---------------------------------------------------------------------------
// b-functions of a hypersurface.

struct BfctResult {
  UniPoly b;
  BFactorization factors;
};

struct BfctOptions {
  GbOptions gb;
  PrincipalOptions intersect;
  AnnOptions ann;
};

/// Via the initial ideal of the Malgrange ideal under Noro weights built from û
/// (all ones when empty).
BfctResult bfct(const NcPoly& f, const std::vector<std::int64_t>& uhat = {}, const BfctOptions& opt = {});

enum class AnnMethod { BM, Syz };
enum class BfctVariant { Alg1, Alg2 };
/// Via the annihilator: Alg1 intersects Ann + <f>, Alg2 intersects
/// Ann + <f, df/dx_i> and multiplies by s + 1.
BfctResult bfct_ann(const NcPoly& f, AnnMethod method = AnnMethod::BM, BfctVariant variant = BfctVariant::Alg2,
                    const BfctOptions& opt = {});

struct BfctIdealOptions {
  BfctOptions base;
  bool check_holonomic = true;
};
/// Global b-function of I ⊂ D_n with respect to w >= 0, w != 0.
BfctResult bfct_ideal(const DIdeal& I, const std::vector<Rational>& w, const BfctIdealOptions& opt = {});

// ---------------------------------------------------------------------------
// Varieties.

enum class VarOrdering {
  Weighted,  // row 1 on each Dt, row 2 with 2 on s_ii and 1 on s_ij, then degrevlex
  LexBlock   // the same two rows, then dp on (Dt, S) and rp on (x, Dx)
};

/// The elimination ordering for Dt on the algebra of var_ann_ideal.
MonOrdering var_ann_ordering(const Algebra& a, VarOrdering kind);

struct VarOptions {
  AnnOptions ann;
  VarOrdering ordering = VarOrdering::Weighted;
  PrincipalOptions intersect;
  GbOptions gb;
  /// Overrides the computed codimension.
  std::optional<int> codim;
  /// Weights on x for the homogenization in bfct_var. Empty: the
  /// quasi-homogeneous weights of f when unique, else all ones.
  std::vector<std::int64_t> uhat;
};

/// Ann_{D_n<S>}(f^s).
AnnResult sannfs_var(const std::vector<NcPoly>& f, const VarOptions& opt = {});

struct VarBfctResult {
  UniPoly b_f;
  UniPoly b_z;
  int codim = 0;
  BFactorization factors;  // of b_z
};

/// b_f as the minimal polynomial of s_11 + .. + s_rr modulo Ann + <f>.
VarBfctResult bfct_var_ann(const std::vector<NcPoly>& f, const VarOptions& opt = {});
/// b_f from the initial ideal of the r-tuple Malgrange ideal.
VarBfctResult bfct_var(const std::vector<NcPoly>& f, const VarOptions& opt = {});

/// n minus the dimension of K[x]/<f>. Throws UnitIdeal when <f> = K[x].
int codim(const std::vector<NcPoly>& f);

/// Commutative Gröbner basis containing 1, i.e. V(f) smooth (over the closure).
bool is_smooth(const NcPoly& f);

}  // namespace bfun
