#include "bfun/cli.hpp"

namespace bfun::cli {

std::string format_poly(const NcPoly& p) { return p.to_string(); }

std::string rat(const Rational& q) { return bfun::to_string(q); }

Json coeffs_json(const UniPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(rat(c));
  return a;
}

Json roots_json(const BFactorization& f) {
  Json a = Json::array();
  for (const auto& [r, m] : f.roots) a.push_back({{"root", rat(r)}, {"mult", m}});
  return a;
}

}  // namespace bfun::cli
