// Serial reference vs batch Buchberger (one thread and OpenMP).
//   bench_gb [repeats]
// Prints one row per instance: wall seconds for each kernel and whether the
// reduced bases agree.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>

#include "bfun/bsato.hpp"
#include "bfun/cli.hpp"

#ifdef BFUN_HAVE_OPENMP
#include <omp.h>
#endif

using namespace bfun;

namespace {

struct Instance {
  std::string name;
  AlgebraPtr algebra;
  std::vector<NcPoly> gens;
};

std::vector<NcPoly> parse_all(const std::vector<std::string>& t, const AlgebraPtr& a) {
  std::vector<NcPoly> out;
  for (const auto& s : t) out.push_back(cli::parse_poly(s, a));
  return out;
}

std::vector<Instance> instances() {
  std::vector<Instance> out;
  auto U = make_usl2();
  out.push_back({"usl2 e^11,f^12,p(h)", U, parse_all({"e^11", "f^12", "h^5-10*h^3+9*h"}, U)});

  auto R = make_polynomial_ring({"x", "y", "z"});
  for (const auto& [name, f] : std::vector<std::pair<std::string, std::string>>{
           {"BM cnu6", "(x*z+y)*(x^6-y^6)"}, {"BM xyz(y-z)(y+z)", "x*y*z*(y-z)*(y+z)"}}) {
    auto I = bm_ideal({cli::parse_poly(f, R)});
    auto ctx = I.algebra->with_ordering(MonOrdering::elimination(I.algebra->nvars(), I.algebra->vars_with_role(VarRole::Dt)));
    std::vector<NcPoly> g;
    for (const auto& p : I.gens) g.push_back(p.in_algebra(ctx));
    out.push_back({name, ctx, g});
  }

  auto R4 = make_polynomial_ring({"z1", "z2", "z3", "z4"});
  auto V = var_ann_ideal(parse_all({"z3^2-z2*z4", "z2^2*z3-z1*z4", "z2^3-z1*z3"}, R4));
  auto vctx = V.algebra->with_ordering(var_ann_ordering(*V.algebra, VarOrdering::Weighted));
  std::vector<NcPoly> vg;
  for (const auto& p : V.gens) vg.push_back(p.in_algebra(vctx));
  out.push_back({"D<Dt,S> cyclic quotient (5,2)", vctx, vg});
  return out;
}

double seconds(const std::function<void()>& f, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 1;
  int threads = 1;
#ifdef BFUN_HAVE_OPENMP
  threads = omp_get_max_threads();
#endif
  std::cout << "threads: " << threads << ", best of " << repeats << "\n";
  std::cout << std::left << std::setw(32) << "instance" << std::right << std::setw(10) << "serial" << std::setw(10)
            << "batch" << std::setw(10) << "omp" << std::setw(8) << "size" << "  agree\n";
  bool all = true;
  for (const auto& in : instances()) {
    GroebnerBasis a, b, c;
    GbOptions par;
    par.parallel = true;
    const double ts = seconds([&] { a = buchberger_serial(in.algebra, in.gens); }, repeats);
    const double tb = seconds([&] { b = buchberger(in.algebra, in.gens); }, repeats);
    const double tp = seconds([&] { c = buchberger(in.algebra, in.gens, par); }, repeats);
    const bool agree = a.elements() == b.elements() && b.elements() == c.elements();
    all = all && agree;
    std::cout << std::left << std::setw(32) << in.name << std::right << std::fixed << std::setprecision(3)
              << std::setw(10) << ts << std::setw(10) << tb << std::setw(10) << tp << std::setw(8) << b.size() << "  "
              << (agree ? "yes" : "NO") << "\n";
  }
  return all ? 0 : 1;
}
