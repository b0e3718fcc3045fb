#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"

using namespace bfun;
using th::P;

namespace {

Mono random_mono(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> e(0, 3);
  Mono m;
  for (int i = 0; i < n; ++i) m[i] = static_cast<std::uint16_t>(e(rng));
  return m;
}

bool same_order(const MonOrdering& a, const MonOrdering& b, int n) {
  std::mt19937 rng(17);
  for (int k = 0; k < 3000; ++k) {
    auto u = random_mono(rng, n), v = random_mono(rng, n);
    int x = a.cmp(u, v), y = b.cmp(u, v);
    if ((x > 0) != (y > 0) || (x < 0) != (y < 0)) return false;
  }
  return true;
}

cli::RunConfig config(const std::string& method, const std::string& vars, std::vector<std::string> inputs) {
  cli::RunConfig c;
  c.method = method;
  if (!vars.empty()) c.vars = cli::split_names(vars);
  c.inputs = std::move(inputs);
  return c;
}

}  // namespace

TEST_CASE("parse and format") {
  auto R = make_polynomial_ring({"x", "y"});
  auto f = cli::parse_poly("x^3 + y^2 + x*y^2", R);
  CHECK(f == P("x*y^2+y^2+x^3", R));
  CHECK(cli::format_poly(f) == "x^3+x*y^2+y^2");
  CHECK(cli::format_poly(cli::parse_poly("1/2*x - 3/4", R)) == "1/2*x-3/4");
  CHECK(cli::format_poly(NcPoly(R)) == "0");
  auto D = make_weyl({"x"});
  CHECK(cli::format_poly(P("Dx*x", D)) == "x*Dx+1");
  CHECK(cli::parse_poly("(x+y)^2", std::vector<std::string>{"x", "y"}).size() == 3);

  std::mt19937 rng(6);
  auto A = make_bm_algebra({"x", "y"}, 1);
  for (int k = 0; k < 20; ++k) {
    auto p = th::random_poly(rng, A, 5, 3);
    CHECK(cli::parse_poly(cli::format_poly(p), A) == p);
  }
}

TEST_CASE("parse errors") {
  auto R = make_polynomial_ring({"x", "y"});
  CHECK_THROWS_AS(cli::parse_poly("x y", R), SyntaxError);
  CHECK_THROWS_AS(cli::parse_poly("x+", R), SyntaxError);
  CHECK_THROWS_AS(cli::parse_poly("(x", R), SyntaxError);
  CHECK_THROWS_AS(cli::parse_poly("x+z", R), UnknownVariable);
  CHECK_THROWS_AS(cli::parse_poly("x^70000", R), ExponentOverflow);
  CHECK_THROWS_AS(cli::split_names("x,,y"), InvalidArgument);
}

TEST_CASE("ordering text") {
  auto A = make_var_ann_algebra({"x0", "y0", "x1", "y1"}, 2);
  auto display = cli::shift_first_order(*A);
  REQUIRE(display.size() == static_cast<std::size_t>(A->nvars()));
  CHECK(A->name(display[0]) == "Dt1");
  auto text = cli::parse_ordering("(a(1,1), a(0,0,2,1,1,2), (dp(6), rp))", *A, display);
  CHECK(same_order(text, var_ann_ordering(*A, VarOrdering::LexBlock), A->nvars()));
  CHECK(same_order(*cli::ordering_preset("weighted", *A), var_ann_ordering(*A, VarOrdering::Weighted), A->nvars()));
  CHECK_FALSE(cli::ordering_preset("nonsense", *A));
  CHECK_THROWS_AS(cli::parse_ordering("a(-1)", *A), NonGlobalOrdering);

  auto R = make_polynomial_ring({"x", "y", "z"});
  CHECK(same_order(cli::parse_ordering("dp", *R), MonOrdering::degrevlex(3), 3));
  CHECK(same_order(cli::parse_ordering("lp", *R), MonOrdering::lex(3), 3));
}

TEST_CASE("run reports") {
  auto r = cli::run(config("bfct", "x,y", {"x^3+y^2"}));
  CHECK(r["method"] == "bfct");
  CHECK(r["b"] == "s^3+3*s^2+107/36*s+35/36");
  REQUIRE(r["roots"].size() == 3);
  CHECK(r["roots"][0]["root"] == "-5/6");
  CHECK(r["roots"][0]["mult"] == 1);
  CHECK(r["factorization"] == "(s+5/6)*(s+1)*(s+7/6)");
  CHECK(r.contains("timings"));

  auto a = cli::run(config("annfs", "x", {"x"}));
  REQUIRE(a["generators"].size() == 1);
  CHECK(a["generators"][0] == "x*Dx-s");

  auto e = cli::run_safe(config("bfct", "x", {"x+y"}));
  CHECK(e.exit_code == 1);
  CHECK(e.report["error"]["code"] == "UnknownVariable");
  auto z = cli::run_safe(config("bfct", "x", {"0"}));
  CHECK(z.exit_code == 1);
  CHECK(z.report["error"]["code"] == "InvalidArgument");

  auto g = config("gb", "x,y", {"x^2-y", "x*y-x"});
  auto gr = cli::run(g);
  CHECK(gr["generators"].size() == 3);
  // three points: (0,0), (1,1), (-1,1)
  CHECK(gr["vdim"] == 3);

  auto p = config("pintersect", "", {"e^3", "f^3", "h^3-h"});
  p.algebra = "usl2";
  p.two_sided = true;
  p.s_element = "4*e*f+h^2-2*h";
  auto pr = cli::run(p);
  auto U = make_usl2();
  auto J = two_sided_gb(U, th::Ps({"e^3", "f^3", "h^3-h"}, U));
  CHECK(pr["b"] == principal_intersect(P("4*e*f+h^2-2*h", U), J).to_string());

  auto v = cli::run(config("bfct-var-ann", "x,y", {"x", "y"}));
  CHECK(v["b_f"] == "s+2");
  CHECK(v["b"] == "s+1");
  CHECK(v["codim"] == 2);

  auto text = cli::to_text(r);
  CHECK(text.find("b(s) = ") != std::string::npos);
}

TEST_CASE("corpus files") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "bfun_corpus_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream(dir / "a.txt") << "# cusp\nname: cusp\nvars: x,y\npoly: x^3+y^2\nexpect: (s+1)*(s+5/6)*(s+7/6)\n";
    std::ofstream(dir / "b.txt") << "vars: x\npoly: x\nexpect: s+2\n";
    std::ofstream(dir / "c.txt") << "vars: x,y\npoly: x\npoly: y\nmethod: bfct-var-ann\n";
    std::ofstream(dir / "skip.md") << "not an example\n";
  }
  auto entries = cli::read_corpus_dir(dir.string());
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].name == "cusp");
  CHECK(entries[1].name == "b");
  CHECK(entries[2].polys.size() == 2);
  auto out = cli::run_corpus(entries, 3);
  REQUIRE(out.size() == 3);
  CHECK(out[0]["matches"] == true);
  CHECK(out[1]["matches"] == false);
  CHECK_FALSE(out[2].contains("matches"));
  CHECK(out[2]["b_f"] == "s+2");

  std::ofstream(dir / "bad.txt") << "vars: x\nwhat: 3\n";
  CHECK_THROWS_AS(cli::read_corpus_file((dir / "bad.txt").string()), InvalidArgument);
  fs::remove_all(dir);
}
