#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "bfun/cli.hpp"
#include "bfun/errors.hpp"

namespace bfun::cli {

namespace {

using Clock = std::chrono::steady_clock;

Json poly_list(const std::vector<NcPoly>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(format_poly(p));
  return a;
}

Json bfct_json(const UniPoly& b, const BFactorization& f, const std::string& key = "b") {
  Json j;
  j[key] = b.to_string("s");
  j[key + "_coeffs"] = coeffs_json(b);
  j["factorization"] = f.to_string("s");
  j["roots"] = roots_json(f);
  j["residual"] = coeffs_json(f.residual);
  return j;
}

std::vector<NcPoly> parse_all(const std::vector<std::string>& in, const AlgebraPtr& a) {
  std::vector<NcPoly> out;
  for (const auto& s : in) out.push_back(parse_poly(s, a));
  return out;
}

AlgebraPtr algebra_for(const RunConfig& cfg) {
  if (cfg.algebra == "poly") return make_polynomial_ring(cfg.vars);
  if (cfg.algebra == "weyl") return make_weyl(cfg.vars);
  if (cfg.algebra == "usl2") return make_usl2();
  throw InvalidArgument("unknown algebra '" + cfg.algebra + "'");
}

MonOrdering resolve_ordering(const std::string& text, const Algebra& a, const std::vector<int>& display = {}) {
  if (auto p = ordering_preset(text, a)) return *p;
  return parse_ordering(text, a, display);
}

void require_inputs(const RunConfig& cfg, std::size_t min, std::size_t max) {
  if (cfg.inputs.size() < min || cfg.inputs.size() > max)
    throw InvalidArgument("method " + cfg.method + " expects " +
                          (min == max ? std::to_string(min) : std::to_string(min) + " or more") + " input(s)");
}

void require_vars(const RunConfig& cfg) {
  if (cfg.vars.empty()) throw InvalidArgument("no variables given");
}

}  // namespace

std::optional<int> env_degree_cap() {
  const char* e = std::getenv("BFUN_DEGREE_CAP");
  if (!e || !*e) return std::nullopt;
  char* end = nullptr;
  long v = std::strtol(e, &end, 10);
  if (*end || v <= 0 || v > 100000) throw InvalidArgument("BFUN_DEGREE_CAP must be a positive integer");
  return static_cast<int>(v);
}

Json run(const RunConfig& cfg) {
  const auto t0 = Clock::now();
  Json out;
  out["method"] = cfg.method;
  out["input"] = {{"vars", cfg.vars}, {"polys", cfg.inputs}};

  auto progress = [&](const std::string& msg) {
    if (cfg.verbosity > 0) std::cerr << "[" << cfg.method << "] " << msg << std::endl;
  };
  GbOptions gb;
  gb.parallel = cfg.parallel;
  if (cfg.verbosity > 0) gb.progress = progress;
  PrincipalOptions pi;
  if (auto c = cfg.cap ? cfg.cap : env_degree_cap()) pi.cap = *c;
  if (cfg.verbosity > 0) pi.progress = progress;
  pi.recurrence = PrincipalOptions::Recurrence::Left;
  BfctOptions bo{gb, pi, AnnOptions{gb, std::nullopt}};
  const std::string& m = cfg.method;

  if (m == "bfct" || m == "bfct-ann" || m == "annfs" || m == "annfs-syz") {
    require_vars(cfg);
    require_inputs(cfg, 1, 1);
    NcPoly f = parse_poly(cfg.inputs[0], cfg.vars);
    if (f.is_zero()) throw InvalidArgument("input must be nonzero");
    if (m == "bfct") {
      auto r = bfct(f, cfg.uhat, bo);
      out.update(bfct_json(r.b, r.factors));
      out["ordering"] = "Malgrange ideal, weights (-w,w) with w = (1,0,..,0), Noro homogenization";
    } else if (m == "bfct-ann") {
      const AnnMethod am = cfg.ann_method == "syz" ? AnnMethod::Syz : AnnMethod::BM;
      if (cfg.ann_method != "bm" && cfg.ann_method != "syz") throw InvalidArgument("ann method must be bm or syz");
      if (cfg.variant != "alg1" && cfg.variant != "alg2") throw InvalidArgument("variant must be alg1 or alg2");
      const BfctVariant v = cfg.variant == "alg1" ? BfctVariant::Alg1 : BfctVariant::Alg2;
      if (!cfg.ordering.empty()) bo.ann.ordering = resolve_ordering(cfg.ordering, *make_bm_algebra(cfg.vars, 1));
      auto r = bfct_ann(f, am, v, bo);
      out.update(bfct_json(r.b, r.factors));
      out["variant"] = cfg.ann_method + "/" + cfg.variant;
    } else {
      auto B = make_bm_algebra(cfg.vars, 1);
      if (!cfg.ordering.empty()) bo.ann.ordering = resolve_ordering(cfg.ordering, *B);
      auto r = m == "annfs" ? annfs_bm(f, bo.ann) : annfs_syz(f, bo.ann);
      out["algebra"] = Json::array();
      for (int v = 0; v < r.algebra->nvars(); ++v) out["algebra"].push_back(r.algebra->name(v));
      out["generators"] = poly_list(r.generators());
      out["ordering"] = r.gb.algebra()->ordering().label();
    }
  } else if (m == "bfct-var" || m == "bfct-var-ann" || m == "ann-var" || m == "bs-ideal") {
    require_vars(cfg);
    require_inputs(cfg, 1, 64);
    auto R = make_polynomial_ring(cfg.vars);
    auto F = parse_all(cfg.inputs, R);
    for (const auto& f : F)
      if (f.is_zero()) throw InvalidArgument("input must be nonzero");
    if (m == "bs-ideal") {
      auto r = bs_ideal(F, cfg.degree, cfg.principal, bo.ann);
      out["basis"] = poly_list(r.basis);
      out["complete"] = r.complete;
      out["degree"] = cfg.degree;
    } else {
      VarOptions vo;
      vo.ann = bo.ann;
      vo.gb = gb;
      vo.intersect = pi;
      vo.codim = cfg.codim;
      if (!cfg.ordering.empty() && m != "bfct-var") {
        auto A = make_var_ann_algebra(cfg.vars, static_cast<int>(F.size()));
        if (cfg.ordering == "weighted" || cfg.ordering == "lexblock")
          vo.ordering = cfg.ordering == "weighted" ? VarOrdering::Weighted : VarOrdering::LexBlock;
        else
          vo.ann.ordering = parse_ordering(cfg.ordering, *A, shift_first_order(*A));
      }
      if (m == "ann-var") {
        auto r = sannfs_var(F, vo);
        out["generators"] = poly_list(r.generators());
        out["ordering"] = r.gb.algebra()->ordering().label();
      } else {
        auto r = m == "bfct-var" ? bfct_var(F, vo) : bfct_var_ann(F, vo);
        out.update(bfct_json(r.b_z, r.factors, "b"));
        out["b_f"] = r.b_f.to_string("s");
        out["codim"] = r.codim;
      }
    }
  } else if (m == "bfct-ideal") {
    require_vars(cfg);
    require_inputs(cfg, 1, 64);
    auto A = make_weyl(cfg.vars);
    if (cfg.weights.size() != cfg.vars.size()) throw InvalidArgument("bfct-ideal: one weight per variable");
    DIdeal I{A, parse_all(cfg.inputs, A)};
    BfctIdealOptions io;
    io.base = bo;
    auto r = bfct_ideal(I, cfg.weights, io);
    out.update(bfct_json(r.b, r.factors));
  } else if (m == "gb" || m == "pintersect") {
    if (cfg.algebra != "usl2") require_vars(cfg);
    require_inputs(cfg, 1, 1024);
    AlgebraPtr A = algebra_for(cfg);
    if (!cfg.ordering.empty()) A = A->with_ordering(resolve_ordering(cfg.ordering, *A));
    auto gens = parse_all(cfg.inputs, A);
    auto G = cfg.two_sided ? two_sided_gb(A, gens, gb) : buchberger(A, gens, gb);
    if (m == "gb") {
      out["generators"] = poly_list(G.elements());
      auto vd = vdim(G);
      out["vdim"] = vd.finite ? Json(vd.value) : Json("infinite");
    } else {
      if (cfg.s_element.empty()) throw InvalidArgument("pintersect: no element given (--s)");
      auto s = parse_poly(cfg.s_element, A);
      auto b = principal_intersect(s, G, pi);
      out.update(bfct_json(b, rational_roots(b)));
    }
    out["ordering"] = A->ordering().label();
  } else {
    throw InvalidArgument("unknown method '" + m + "'");
  }
  out["timings"] = {{"total_ms", std::chrono::duration<double, std::milli>(Clock::now() - t0).count()}};
  return out;
}

Outcome run_safe(const RunConfig& cfg) {
  try {
    return {run(cfg), 0};
  } catch (const Error& e) {
    return {Json{{"method", cfg.method}, {"error", {{"code", e.code()}, {"message", e.what()}}}}, 1};
  } catch (const std::exception& e) {
    return {Json{{"method", cfg.method}, {"error", {{"code", "Internal"}, {"message", e.what()}}}}, 1};
  }
}

std::string to_text(const Json& r) {
  std::ostringstream os;
  if (r.contains("error")) {
    os << "error (" << r["error"]["code"].get<std::string>() << "): " << r["error"]["message"].get<std::string>() << "\n";
    return os.str();
  }
  if (r.contains("factorization")) os << "b(s) = " << r["factorization"].get<std::string>() << "\n";
  if (r.contains("codim")) os << "codim = " << r["codim"].get<int>() << "\n";
  if (r.contains("roots"))
    for (const auto& e : r["roots"]) os << "  root " << e["root"].get<std::string>() << "  mult " << e["mult"].get<int>() << "\n";
  if (r.contains("generators")) {
    int k = 1;
    for (const auto& g : r["generators"]) os << "LD[" << k++ << "]=" << g.get<std::string>() << "\n";
  }
  if (r.contains("basis")) {
    int k = 1;
    for (const auto& g : r["basis"]) os << "B[" << k++ << "]=" << g.get<std::string>() << "\n";
    os << (r["complete"].get<bool>() ? "complete" : "truncated at degree " + std::to_string(r["degree"].get<int>())) << "\n";
  }
  if (r.contains("vdim")) os << "vdim = " << r["vdim"].dump() << "\n";
  return os.str();
}

}  // namespace bfun::cli
