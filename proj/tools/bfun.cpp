#include <iostream>

#include "CLI11.hpp"
#include "bfun/cli.hpp"
#include "bfun/errors.hpp"

using namespace bfun;

namespace {

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : cli::split_names(text)) {
    Rational q;
    try {
      q = Rational(s);
    } catch (const std::invalid_argument&) {
      throw InvalidArgument("bad rational '" + s + "'");
    }
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& s : cli::split_names(text)) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw InvalidArgument("bad integer '" + s + "'");
    out.push_back(v);
  }
  return out;
}

void emit(const cli::Json& report, bool json) {
  if (json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << cli::to_text(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"b-functions, annihilators of f^s and Bernstein-Sato polynomials over Q"};
  app.require_subcommand(1);

  cli::RunConfig cfg;
  std::string vars, uhat, weights, format = "text";
  bool json = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--vars", vars, "comma-separated variable names");
    sub->add_flag("--json", json, "emit the JSON report");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("-v,--verbose", cfg.verbosity, "progress lines on stderr");
    sub->add_flag("--parallel", cfg.parallel, "reduce each degree batch with OpenMP");
    sub->add_option("--cap", cfg.cap, "degree cap of the principal intersection (default: BFUN_DEGREE_CAP or 200)");
  };

  struct Method {
    const char* name;
    const char* help;
  };
  const Method methods[] = {
      {"bfct", "global b-function of f via the initial Malgrange ideal"},
      {"bfct-ann", "b-function of f via Ann(f^s)"},
      {"bfct-ideal", "global b-function of a holonomic ideal in the Weyl algebra"},
      {"annfs", "Ann(f^s) in D[s] by elimination"},
      {"annfs-syz", "Ann(f^s) in D[s], seeded with syzygies of (f, df)"},
      {"ann-var", "Ann(f_1^s_1..f_r^s_r) in D<S>"},
      {"bfct-var", "Bernstein-Sato polynomial of V(f_1..f_r) via initial ideals"},
      {"bfct-var-ann", "Bernstein-Sato polynomial of V(f_1..f_r) via D<S>"},
      {"bs-ideal", "Bernstein-Sato ideal of (f_1..f_p), truncated by degree"},
      {"pintersect", "minimal polynomial of s modulo a left (or two-sided) ideal"},
      {"gb", "left Groebner basis"},
  };

  std::vector<std::pair<CLI::App*, std::string>> subs;
  for (const auto& m : methods) {
    auto* sub = app.add_subcommand(m.name, m.help);
    common(sub);
    sub->add_option("inputs", cfg.inputs, "polynomials (or operators)")->required();
    const std::string name = m.name;
    if (name == "bfct") sub->add_option("--uhat", uhat, "homogenization weights on x (comma-separated)");
    if (name == "bfct-ann") {
      sub->add_option("--variant", cfg.variant, "alg1 or alg2")->check(CLI::IsMember({"alg1", "alg2"}));
      sub->add_option("--ann", cfg.ann_method, "bm or syz")->check(CLI::IsMember({"bm", "syz"}));
    }
    if (name == "bfct-ideal") sub->add_option("--weights", weights, "weight on each x (comma-separated)")->required();
    if (name == "bfct-ann" || name == "annfs" || name == "annfs-syz" || name == "ann-var" || name == "bfct-var-ann" ||
        name == "gb" || name == "pintersect")
      sub->add_option("--ordering", cfg.ordering,
                      "preset (elim, weighted, lexblock, dp) or blocks such as "
                      "\"(a(1,1), a(0,0,2,1,1,2), (dp(6), rp))\"; weighted = rows (1 on Dt), (2 on s_ii, 1 on s_ij), "
                      "then degrevlex; lexblock = the same rows, then dp on (Dt, S) and rp on (x, Dx)");
    if (name == "bfct-var" || name == "bfct-var-ann") sub->add_option("--codim", cfg.codim, "override the codimension");
    if (name == "bs-ideal") {
      sub->add_option("--degree", cfg.degree, "truncation degree");
      sub->add_flag("--principal", cfg.principal, "stop at the first element");
    }
    if (name == "gb" || name == "pintersect") {
      sub->add_option("--algebra", cfg.algebra, "poly, weyl or usl2")->check(CLI::IsMember({"poly", "weyl", "usl2"}));
      sub->add_flag("--two-sided", cfg.two_sided, "two-sided ideal");
    }
    if (name == "pintersect") sub->add_option("--s", cfg.s_element, "the element s")->required();
    subs.emplace_back(sub, name);
  }

  auto* corpus = app.add_subcommand("corpus", "run a directory of example files");
  std::string dir;
  int jobs = 1;
  std::string corpus_method;
  corpus->add_option("dir", dir, "directory of *.txt examples")->required();
  corpus->add_option("--jobs", jobs, "concurrent examples")->check(CLI::PositiveNumber);
  corpus->add_option("--method", corpus_method, "override the method of every entry");
  corpus->add_flag("-v,--verbose", cfg.verbosity, "progress lines on stderr");

  CLI11_PARSE(app, argc, argv);

  if (corpus->parsed()) {
    try {
      auto entries = cli::read_corpus_dir(dir);
      if (!corpus_method.empty())
        for (auto& e : entries) e.method = corpus_method;
      auto out = cli::run_corpus(entries, jobs, cfg);
      std::cout << out.dump(2) << "\n";
      for (const auto& r : out)
        if (r.contains("error") || (r.contains("matches") && !r["matches"].get<bool>())) return 1;
      return 0;
    } catch (const Error& e) {
      emit(cli::Json{{"error", {{"code", e.code()}, {"message", e.what()}}}}, true);
      return 1;
    }
  }

  for (const auto& [sub, name] : subs)
    if (sub->parsed()) cfg.method = name;
  json = json || format == "json";
  try {
    if (!vars.empty()) cfg.vars = cli::split_names(vars);
    if (!uhat.empty()) cfg.uhat = parse_ints(uhat);
    if (!weights.empty()) cfg.weights = parse_rationals(weights);
  } catch (const Error& e) {
    emit(cli::Json{{"method", cfg.method}, {"error", {{"code", e.code()}, {"message", e.what()}}}}, json);
    return 1;
  }
  auto out = cli::run_safe(cfg);
  emit(out.report, json);
  return out.exit_code;
}
