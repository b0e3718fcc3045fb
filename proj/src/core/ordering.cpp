#include "bfun/ordering.hpp"

#include <algorithm>
#include <numeric>

#include "bfun/errors.hpp"

namespace bfun {

namespace {

std::vector<int> iota_vars(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::string row_text(const std::vector<Rational>& row) {
  std::string s = "a(";
  for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + to_string(row[i]);
  return s + ")";
}

}  // namespace

MonOrdering::MonOrdering(int nvars, Kind kind, std::vector<Stage> stages, std::string label,
                         std::optional<int> hvar)
    : nvars_(nvars), kind_(kind), stages_(std::move(stages)), label_(std::move(label)), hvar_(hvar) {
  if (nvars < 0 || nvars > kMaxVars) throw InvalidArgument("ordering: variable count out of range");
}

MonOrdering::Stage MonOrdering::weight_stage(int nvars, const std::vector<Rational>& row) {
  if (static_cast<int>(row.size()) > nvars) throw InvalidArgument("weight row longer than variable count");
  Integer den = common_denominator(row);
  Stage st;
  st.type = Stage::Type::Weight;
  for (std::size_t i = 0; i < row.size(); ++i) {
    Rational scaled = row[i] * den;
    if (!scaled.get_num().fits_slong_p()) throw InvalidArgument("weight too large");
    st.w[i] = scaled.get_num().get_si();
  }
  return st;
}

MonOrdering::Stage MonOrdering::weight_stage_int(int nvars, const std::vector<std::int64_t>& row) {
  if (static_cast<int>(row.size()) > nvars) throw InvalidArgument("weight row longer than variable count");
  Stage st;
  st.type = Stage::Type::Weight;
  for (std::size_t i = 0; i < row.size(); ++i) st.w[i] = row[i];
  return st;
}

std::vector<MonOrdering::Stage> MonOrdering::dp_stages(int nvars, const std::vector<int>& vars) {
  Stage deg;
  deg.type = Stage::Type::Weight;
  for (int v : vars) {
    if (v < 0 || v >= nvars) throw InvalidArgument("dp block variable out of range");
    deg.w[static_cast<std::size_t>(v)] = 1;
  }
  Stage tie;
  tie.type = Stage::Type::RevLex;
  tie.vars = vars;
  return {deg, tie};
}

std::vector<MonOrdering::Stage> MonOrdering::Dp_stages(int nvars, const std::vector<int>& vars) {
  auto st = dp_stages(nvars, vars);
  st[1].type = Stage::Type::Lex;
  return st;
}

std::vector<MonOrdering::Stage> MonOrdering::lp_stages(const std::vector<int>& vars) {
  Stage tie;
  tie.type = Stage::Type::Lex;
  tie.vars = vars;
  return {tie};
}

std::vector<MonOrdering::Stage> MonOrdering::rp_stages(const std::vector<int>& vars) {
  Stage tie;
  tie.type = Stage::Type::RevVarLex;
  tie.vars = vars;
  return {tie};
}

MonOrdering MonOrdering::degrevlex(int n) {
  return MonOrdering(n, Kind::Degrevlex, dp_stages(n, iota_vars(n)), "dp");
}

MonOrdering MonOrdering::deglex(int n) {
  return MonOrdering(n, Kind::Block, Dp_stages(n, iota_vars(n)), "Dp");
}

MonOrdering MonOrdering::lex(int n) { return MonOrdering(n, Kind::Lex, lp_stages(iota_vars(n)), "lp"); }

MonOrdering MonOrdering::weighted(int n, const std::vector<std::vector<Rational>>& rows) {
  return matrix(n, rows, degrevlex(n));
}

MonOrdering MonOrdering::matrix(int n, const std::vector<std::vector<Rational>>& rows, const MonOrdering& tie) {
  std::vector<Stage> st;
  std::string label = "(";
  for (const auto& r : rows) {
    st.push_back(weight_stage(n, r));
    label += row_text(r) + ",";
  }
  st.insert(st.end(), tie.stages().begin(), tie.stages().end());
  label += tie.label() + ")";
  return MonOrdering(n, rows.size() == 1 ? Kind::WeightedFirstRow : Kind::Matrix, std::move(st), label);
}

MonOrdering MonOrdering::elimination(int n, const std::vector<int>& first) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int v : first) {
    if (v < 0 || v >= n) throw InvalidArgument("elimination variable out of range");
    in[static_cast<std::size_t>(v)] = true;
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (!in[static_cast<std::size_t>(v)]) rest.push_back(v);
  auto st = dp_stages(n, first);
  auto st2 = dp_stages(n, rest);
  st.insert(st.end(), st2.begin(), st2.end());
  return MonOrdering(n, Kind::Block, std::move(st), "(dp(" + std::to_string(first.size()) + "),dp(" +
                                                        std::to_string(rest.size()) + "))");
}

MonOrdering MonOrdering::homogenized(const MonOrdering& base, const std::vector<std::int64_t>& degree, int hvar) {
  const int n = base.nvars();
  if (hvar < 0 || hvar >= n) throw InvalidArgument("homogenizing variable out of range");
  if (static_cast<int>(degree.size()) != n || degree[static_cast<std::size_t>(hvar)] != 1)
    throw InvalidArgument("homogenized ordering: degree row must give h weight 1");
  std::vector<Stage> st;
  st.push_back(weight_stage_int(n, degree));
  for (Stage s : base.stages()) {
    if (s.type == Stage::Type::Weight) {
      s.w[static_cast<std::size_t>(hvar)] = 0;
    } else {
      std::erase(s.vars, hvar);
    }
    st.push_back(std::move(s));
  }
  return MonOrdering(n, Kind::HomogenizedDerived, std::move(st), "homog(" + base.label() + ")", hvar);
}

bool MonOrdering::is_total() const {
  for (int v = 0; v < nvars_; ++v) {
    bool touched = false;
    for (const auto& st : stages_) {
      if (st.type == Stage::Type::Weight ? st.w[static_cast<std::size_t>(v)] != 0
                                         : std::find(st.vars.begin(), st.vars.end(), v) != st.vars.end()) {
        touched = true;
        break;
      }
    }
    if (!touched) return false;
  }
  return true;
}

bool MonOrdering::is_global() const {
  for (int v = 0; v < nvars_; ++v) {
    int sign = 0;
    for (const auto& st : stages_) {
      if (st.type == Stage::Type::Weight) {
        auto w = st.w[static_cast<std::size_t>(v)];
        if (w != 0) sign = w > 0 ? 1 : -1;
      } else if (std::find(st.vars.begin(), st.vars.end(), v) != st.vars.end()) {
        sign = st.type == Stage::Type::RevLex ? -1 : 1;
      }
      if (sign != 0) break;
    }
    if (sign <= 0) return false;
  }
  return true;
}

std::array<std::int64_t, kMaxVars> MonOrdering::degree_weights() const {
  std::array<std::int64_t, kMaxVars> ones{};
  for (int i = 0; i < nvars_; ++i) ones[static_cast<std::size_t>(i)] = 1;
  if (stages_.empty() || stages_.front().type != Stage::Type::Weight) return ones;
  const auto& w = stages_.front().w;
  for (int i = 0; i < nvars_; ++i)
    if (w[static_cast<std::size_t>(i)] <= 0) return ones;
  return w;
}

MonOrdering MonOrdering::restricted(const std::vector<int>& map, int new_nvars) const {
  std::vector<Stage> st;
  for (const auto& s : stages_) {
    Stage t;
    t.type = s.type;
    bool any = false;
    if (s.type == Stage::Type::Weight) {
      for (int v = 0; v < nvars_ && v < static_cast<int>(map.size()); ++v)
        if (map[static_cast<std::size_t>(v)] >= 0 && s.w[static_cast<std::size_t>(v)] != 0) {
          t.w[static_cast<std::size_t>(map[static_cast<std::size_t>(v)])] = s.w[static_cast<std::size_t>(v)];
          any = true;
        }
    } else {
      for (int v : s.vars)
        if (v < static_cast<int>(map.size()) && map[static_cast<std::size_t>(v)] >= 0)
          t.vars.push_back(map[static_cast<std::size_t>(v)]);
      any = !t.vars.empty();
    }
    if (any) st.push_back(std::move(t));
  }
  return MonOrdering(new_nvars, Kind::Matrix, std::move(st), label_ + "|restricted");
}

}  // namespace bfun
