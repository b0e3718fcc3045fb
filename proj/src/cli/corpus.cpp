#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include "bfun/cli.hpp"
#include "bfun/errors.hpp"

namespace bfun::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

UniPoly to_unipoly(const NcPoly& p) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(0, p.total_degree()) + 1), Rational(0));
  for (const auto& t : p.terms()) c[t.m[0]] = t.c;
  return UniPoly(std::move(c));
}

}  // namespace

CorpusEntry read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  CorpusEntry e;
  e.name = std::filesystem::path(path).stem().string();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw InvalidArgument(path + ":" + std::to_string(lineno) + ": expected 'key: value'");
    const std::string key = trim(line.substr(0, colon)), val = trim(line.substr(colon + 1));
    if (key == "name")
      e.name = val;
    else if (key == "vars")
      e.vars = split_names(val);
    else if (key == "poly")
      e.polys.push_back(val);
    else if (key == "expect")
      e.expect = val;
    else if (key == "method")
      e.method = val;
    else
      throw InvalidArgument(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  if (e.vars.empty() || e.polys.empty()) throw InvalidArgument(path + ": needs vars and poly");
  return e;
}

std::vector<CorpusEntry> read_corpus_dir(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& f : std::filesystem::directory_iterator(dir))
    if (f.is_regular_file() && f.path().extension() == ".txt") files.push_back(f.path().string());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) out.push_back(read_corpus_file(f));
  return out;
}

Json run_corpus(const std::vector<CorpusEntry>& entries, int jobs, const RunConfig& base) {
  std::vector<Json> results(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      const auto& e = entries[i];
      RunConfig cfg = base;
      cfg.method = e.method;
      cfg.vars = e.vars;
      cfg.inputs = e.polys;
      Outcome o = run_safe(cfg);
      Json r = o.report;
      r["name"] = e.name;
      if (e.expect && o.exit_code == 0 && r.contains("b")) {
        try {
          UniPoly want = to_unipoly(parse_poly(*e.expect, std::vector<std::string>{"s"})).monic();
          UniPoly got = to_unipoly(parse_poly(r["b"].get<std::string>(), std::vector<std::string>{"s"}));
          r["matches"] = want == got;
        } catch (const Error& err) {
          r["matches"] = false;
          r["expect_error"] = err.what();
        }
      }
      results[i] = std::move(r);
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(entries.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  Json out = Json::array();
  for (auto& r : results) out.push_back(std::move(r));
  return out;
}

}  // namespace bfun::cli
