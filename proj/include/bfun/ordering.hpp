#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfun/monomial.hpp"
#include "bfun/rational.hpp"

namespace bfun {

/// A monomial ordering compiled to a chain of stages: integer weight rows
/// followed by variable-wise tie-breaks. Rational weight rows are scaled to
/// integers on construction, which leaves the order unchanged.
class MonOrdering {
 public:
  enum class Kind { Degrevlex, Lex, WeightedFirstRow, Block, Matrix, HomogenizedDerived };

  struct Stage {
    enum class Type {
      Weight,   // compare dot(w, a)
      RevLex,   // last differing var in `vars`: smaller exponent wins
      Lex,      // first differing var in `vars`: larger exponent wins
      RevVarLex // last differing var in `vars`: larger exponent wins
    };
    Type type = Type::Weight;
    std::array<std::int64_t, kMaxVars> w{};
    std::vector<int> vars;

    friend bool operator==(const Stage&, const Stage&) = default;
  };

  MonOrdering() = default;
  MonOrdering(int nvars, Kind kind, std::vector<Stage> stages, std::string label,
              std::optional<int> hvar = std::nullopt);

  // Stage builders.
  static Stage weight_stage(int nvars, const std::vector<Rational>& row);
  static Stage weight_stage_int(int nvars, const std::vector<std::int64_t>& row);
  static std::vector<Stage> dp_stages(int nvars, const std::vector<int>& vars);
  static std::vector<Stage> Dp_stages(int nvars, const std::vector<int>& vars);
  static std::vector<Stage> lp_stages(const std::vector<int>& vars);
  static std::vector<Stage> rp_stages(const std::vector<int>& vars);

  static MonOrdering degrevlex(int nvars);
  static MonOrdering deglex(int nvars);
  static MonOrdering lex(int nvars);
  /// Weight rows first, then degrevlex.
  static MonOrdering weighted(int nvars, const std::vector<std::vector<Rational>>& rows);
  /// Arbitrary rows, then the tie-break stages of `tie`.
  static MonOrdering matrix(int nvars, const std::vector<std::vector<Rational>>& rows,
                            const MonOrdering& tie);
  /// Block ordering: `first` ≫ the remaining variables, degrevlex inside each block.
  static MonOrdering elimination(int nvars, const std::vector<int>& first);
  /// The homogenized global ordering: compare the `degree` row (which must
  /// weight `hvar` by 1) first, then `base` applied to the dehomogenized part.
  static MonOrdering homogenized(const MonOrdering& base, const std::vector<std::int64_t>& degree, int hvar);

  /// The induced ordering on a subset of variables: map[v] is the new index
  /// of v or -1 when v is dropped. Stages left empty are removed.
  MonOrdering restricted(const std::vector<int>& map, int new_nvars) const;

  int nvars() const { return nvars_; }
  Kind kind() const { return kind_; }
  const std::vector<Stage>& stages() const { return stages_; }
  const std::string& label() const { return label_; }
  std::optional<int> hvar() const { return hvar_; }

  /// -1, 0, +1 as a ≺ b, a = b, a ≻ b.
  int cmp(const Mono& a, const Mono& b) const {
    for (const auto& st : stages_) {
      switch (st.type) {
        case Stage::Type::Weight: {
          std::int64_t d = 0;
          for (int i = 0; i < nvars_; ++i)
            d += st.w[static_cast<std::size_t>(i)] * (std::int64_t(a[i]) - std::int64_t(b[i]));
          if (d != 0) return d < 0 ? -1 : 1;
          break;
        }
        case Stage::Type::RevLex:
          for (auto it = st.vars.rbegin(); it != st.vars.rend(); ++it)
            if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
          break;
        case Stage::Type::Lex:
          for (int v : st.vars)
            if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
          break;
        case Stage::Type::RevVarLex:
          for (auto it = st.vars.rbegin(); it != st.vars.rend(); ++it)
            if (a[*it] != b[*it]) return a[*it] > b[*it] ? 1 : -1;
          break;
      }
    }
    return 0;
  }

  bool greater(const Mono& a, const Mono& b) const { return cmp(a, b) > 0; }

  /// Every variable is decided positively by the first stage touching it,
  /// which makes 1 the minimum and the order a well-ordering.
  bool is_global() const;
  /// Every variable is touched by some stage (needed for a total order).
  bool is_total() const;

  /// Strictly positive first weight row if present, all-ones otherwise. Used
  /// as the degree of the normal pair-selection strategy.
  std::array<std::int64_t, kMaxVars> degree_weights() const;

  friend bool operator==(const MonOrdering& a, const MonOrdering& b) {
    return a.nvars_ == b.nvars_ && a.stages_ == b.stages_;
  }

 private:
  int nvars_ = 0;
  Kind kind_ = Kind::Degrevlex;
  std::vector<Stage> stages_;
  std::string label_;
  std::optional<int> hvar_;
};

}  // namespace bfun
