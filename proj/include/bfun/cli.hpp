#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bfun/bsato.hpp"
#include "json.hpp"

namespace bfun::cli {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Text <-> polynomials.

/// Parse `text` in the algebra `a`. Products are taken in the order written.
/// Grammar: + - * ^ ( ), integer and rational literals, generator names.
NcPoly parse_poly(const std::string& text, const AlgebraPtr& a);
/// Commutative polynomial over the given variable names.
NcPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

/// Canonical text: terms in descending order of the algebra's ordering,
/// explicit * and ^, coefficients as num/den.
std::string format_poly(const NcPoly& p);

/// "x,y, z" -> {"x","y","z"}; empty items are rejected.
std::vector<std::string> split_names(const std::string& text);

// ---------------------------------------------------------------------------
// Orderings.

/// Parse an ordering on `a` written as a list of blocks:
///   a(w1,..)    weight row (padded with zeros)
///   dp(k) rp(k) lp(k) Dp(k)   tie-break on the next k variables
///   dp rp lp Dp               the same on all remaining variables
/// Grouping parentheses are ignored, so "(a(1,1), a(0,0,2,1,1,2), (dp(6), rp))"
/// is accepted. Positions refer to `display` (default: algebra order).
/// Missing tie-breaks are completed by dp on the remaining variables.
MonOrdering parse_ordering(const std::string& text, const Algebra& a, const std::vector<int>& display = {});

/// Display order of the var_ann algebra: Dt, then s_ij row major, then x, Dx.
std::vector<int> shift_first_order(const Algebra& a);

/// Named presets: "weighted" and "lexblock" for the var_ann algebra,
/// "elim" (Dt block) for the BM algebra. Empty when the name is unknown.
std::optional<MonOrdering> ordering_preset(const std::string& name, const Algebra& a);

// ---------------------------------------------------------------------------
// Runs.

struct RunConfig {
  std::string method;  // bfct | bfct-ann | bfct-ideal | annfs | annfs-syz | ann-var | bfct-var | bfct-var-ann | bs-ideal | pintersect | gb
  std::vector<std::string> vars;
  std::vector<std::string> inputs;  // polynomials or operators
  std::string algebra = "poly";     // gb/pintersect: poly | weyl | usl2
  std::string ordering;             // preset name or ordering text
  std::vector<std::int64_t> uhat;
  std::vector<Rational> weights;    // bfct-ideal
  std::string s_element;            // pintersect
  std::string variant = "alg2";     // bfct-ann: alg1 | alg2
  std::string ann_method = "bm";    // bfct-ann: bm | syz
  int degree = 2;                   // bs-ideal truncation degree
  bool principal = false;           // bs-ideal
  std::optional<int> codim;
  std::optional<int> cap;           // principal intersection degree cap
  bool two_sided = false;           // gb/pintersect
  bool parallel = false;
  int verbosity = 0;
};

/// Degree cap from BFUN_DEGREE_CAP, if set to a positive integer.
std::optional<int> env_degree_cap();

/// Run one computation; throws bfun::Error on failure.
Json run(const RunConfig& cfg);

/// run() with failures turned into {"error": {"code", "message"}} and exit code 1.
struct Outcome {
  Json report;
  int exit_code = 0;
};
Outcome run_safe(const RunConfig& cfg);

/// Plain-text rendering of a report.
std::string to_text(const Json& report);

/// Exact rational as "num/den" (or "num").
std::string rat(const Rational& q);
Json roots_json(const BFactorization& f);
Json coeffs_json(const UniPoly& p);

// ---------------------------------------------------------------------------
// Corpus.

/// One example per file:
///   name: cnu6
///   vars: x,y,z
///   poly: (x*z+y)*(x^6-y^6)
///   expect: (s+1)^2*(s+1/2)      (optional)
///   method: bfct                 (optional)
/// Lines starting with # are comments.
struct CorpusEntry {
  std::string name;
  std::vector<std::string> vars;
  std::vector<std::string> polys;
  std::string method = "bfct";
  std::optional<std::string> expect;
};

CorpusEntry read_corpus_file(const std::string& path);
std::vector<CorpusEntry> read_corpus_dir(const std::string& dir);

/// Run entries on up to `jobs` threads; one report per entry, input order kept.
/// An entry with an expectation gets "matches": true/false.
Json run_corpus(const std::vector<CorpusEntry>& entries, int jobs, const RunConfig& base = {});

}  // namespace bfun::cli
