#include <regex>

#include "doctest.h"
#include "bfun/bsato.hpp"
#include "helpers.hpp"

using namespace bfun;
using th::P;
using th::Ps;
using th::q;

namespace {

std::vector<NcPoly> ann_in(const AnnResult& a) {
  std::vector<NcPoly> out;
  for (const auto& g : a.generators()) out.push_back(g.in_algebra(a.algebra));
  return out;
}

/// The generators of `a` copied into the algebra of `into`.
std::vector<NcPoly> ann_in(const AnnResult& a, const AnnResult& into) {
  std::vector<NcPoly> out;
  for (const auto& g : a.generators()) out.push_back(map_roles(g, into.algebra));
  return out;
}

UniPoly b_of(const std::string& text) {
  auto p = cli::parse_poly(text, std::vector<std::string>{"s"});
  std::vector<Rational> c(static_cast<std::size_t>(p.total_degree() + 1), Rational(0));
  for (const auto& t : p.terms()) c[t.m[0]] = t.c;
  return UniPoly(std::move(c)).monic();
}

}  // namespace

TEST_CASE("rational roots") {
  auto f = rational_roots(th::from_roots({{q("-1"), 1}, {q("-5/6"), 1}}));
  REQUIRE(f.roots.size() == 2);
  CHECK(f.roots[0] == std::make_pair(q("-5/6"), 1));
  CHECK(f.roots[1] == std::make_pair(q("-1"), 1));
  CHECK(f.residual == UniPoly::constant(1));

  auto one = rational_roots(UniPoly::constant(1));
  CHECK(one.roots.empty());

  auto mixed = rational_roots(b_of("(s^2+1)*(s+1)^2*(s+1/3)^2*(s+2/3)"));
  CHECK(mixed.roots.size() == 3);
  CHECK(mixed.residual == b_of("s^2+1"));
  CHECK(mixed.to_string() == "(s+1/3)^2*(s+2/3)*(s+1)^2*(s^2+1)");

  std::mt19937 rng(1);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12), mult(1, 3);
  for (int k = 0; k < 20; ++k) {
    std::vector<std::pair<Rational, int>> r;
    for (int i = 0; i < 4; ++i) {
      Rational x(num(rng), den(rng));
      x.canonicalize();
      bool dup = false;
      for (const auto& e : r) dup = dup || e.first == x;
      if (!dup) r.emplace_back(x, mult(rng));
    }
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    auto got = rational_roots(th::from_roots(r));
    CHECK(got.roots == r);
  }
}

TEST_CASE("b-functions of small hypersurfaces") {
  auto R = make_polynomial_ring({"x", "y"});
  CHECK(bfct(P("x", R)).b == b_of("s+1"));
  auto c = bfct(P("x^3+y^2", R));
  CHECK(c.b == b_of("(s+1)*(s+5/6)*(s+7/6)"));
  CHECK(c.b.eval(Rational(-1)) == 0);
  // quasi-homogeneous weights give the same answer
  CHECK(bfct(P("x^3+y^2", R), {2, 3}).b == c.b);
  CHECK(bfct(P("x*y", R)).b == b_of("(s+1)^2"));
}

TEST_CASE("annihilators") {
  auto R = make_polynomial_ring({"x"});
  auto a = annfs_bm(P("x", R));
  CHECK(th::same_left_ideal(a.algebra, ann_in(a), {P("x*Dx-s", a.algebra)}));

  auto R2 = make_polynomial_ring({"x", "y"});
  auto c = annfs_bm(P("7", R2));
  CHECK(th::same_left_ideal(c.algebra, ann_in(c), Ps({"Dx", "Dy"}, c.algebra)));

  for (const std::string f : {"x^3+y^2", "x^3+y^2+x*y^2", "x*y*(x+y)"}) {
    auto F = P(f, R2);
    auto bm = annfs_bm(F), syz = annfs_syz(F);
    for (const auto& g : bm.generators()) CHECK(apply_to_fs(g, {F}).is_zero());
    for (const auto& g : syz.generators()) CHECK(apply_to_fs(g, {F}).is_zero());
    CHECK(th::same_left_ideal(bm.algebra, ann_in(bm), ann_in(syz, bm)));
    // f Dx - s df/dx lies in the annihilator
    NcPoly fx = P("(" + f + ")*Dx", bm.algebra) - P("s", bm.algebra) * partial(F, 0).transfer(bm.algebra);
    CHECK(bm.gb.contains(fx.in_algebra(bm.gb.algebra())));
  }
}

TEST_CASE("multi annihilator and Bernstein-Sato ideal") {
  auto R = make_polynomial_ring({"x", "y"});
  auto F = Ps({"x", "y"}, R);
  auto a = annfs_bm_multi(F);
  CHECK(th::same_left_ideal(a.algebra, ann_in(a), Ps({"x*Dx-s1", "y*Dy-s2"}, a.algebra)));
  auto B = bs_ideal(F, 2);
  auto want = P("(s1+1)*(s2+1)", B.ring);
  CHECK(th::same_left_ideal(B.ring, B.basis, {want}));

  auto G = Ps({"x", "x"}, R);
  auto a2 = annfs_bm_multi(G);
  for (const auto& g : a2.generators()) CHECK(apply_to_fs(g, G).is_zero());
}

TEST_CASE("b-function via the annihilator") {
  auto R = make_polynomial_ring({"x", "y"});
  CHECK(bfct_ann(P("x", R)).b == b_of("s+1"));
  CHECK(is_smooth(P("x+y^2", R)));
  CHECK_FALSE(is_smooth(P("x*y", R)));
  for (const std::string f : {"x^3+y^2", "x^3+y^2+x*y^2", "x^2*y^2"}) {
    auto F = P(f, R);
    auto b1 = bfct_ann(F, AnnMethod::BM, BfctVariant::Alg1).b;
    auto b2 = bfct_ann(F, AnnMethod::BM, BfctVariant::Alg2).b;
    auto b3 = bfct_ann(F, AnnMethod::Syz, BfctVariant::Alg2).b;
    CHECK(b1 == b2);
    CHECK(b2 == b3);
    CHECK(bfct(F).b == b1);
  }
}

TEST_CASE("global b-function of an ideal") {
  auto D = make_weyl({"x"});
  CHECK(bfct_ideal(DIdeal{D, {P("Dx", D)}}, {Rational(1)}).b == b_of("s"));
  CHECK_THROWS_AS(bfct_ideal(DIdeal{D, {P("Dx", D)}}, {Rational(0)}), InvalidArgument);
  CHECK_THROWS_AS(bfct_ideal(DIdeal{D, {}}, {Rational(1)}), NotHolonomic);

  auto R = make_polynomial_ring({"x", "y"});
  auto f = P("x^3+y^2", R);
  auto M = malgrange_ideal({f});
  auto B = bfct_ideal(M, {Rational(1), Rational(0), Rational(0)}).b;
  CHECK(B.compose_linear(Rational(-1), Rational(-1)).monic() == bfct(f).b);
}

TEST_CASE("codimension") {
  auto R3 = make_polynomial_ring({"x1", "x2", "x3"});
  CHECK(codim(Ps({"x1^3-x2*x3", "x2^2-x1*x3", "x3^2-x1^2*x2"}, R3)) == 2);
  CHECK(codim({P("x3", R3)}) == 1);
  auto R4 = make_polynomial_ring({"z1", "z2", "z3", "z4"});
  CHECK(codim(Ps({"z3^2-z2*z4", "z2^2*z3-z1*z4", "z2^3-z1*z3"}, R4)) == 2);
  CHECK_THROWS_AS(codim(Ps({"x1", "x1-1"}, R3)), UnitIdeal);
}

TEST_CASE("varieties: small cases") {
  auto R = make_polynomial_ring({"x", "y"});
  auto h = bfct_var_ann({P("x", R)});
  CHECK(h.b_f == b_of("s+1"));
  CHECK(h.b_z == b_of("s+1"));
  CHECK(h.codim == 1);

  // a point in the plane: b_f = s + 2
  auto F = Ps({"x", "y"}, R);
  auto a = bfct_var_ann(F), b = bfct_var(F);
  CHECK(a.b_f == b_of("s+2"));
  CHECK(a.b_z == b_of("s+1"));
  CHECK(b.b_f == a.b_f);

  // r = 1 agrees with the hypersurface route
  auto c = P("x^3+y^2", R);
  CHECK(bfct_var({c}).b_f == bfct(c).b);
  CHECK(bfct_var_ann({c}).b_f == bfct(c).b);

  VarOptions opt;
  opt.codim = 3;
  CHECK(bfct_var_ann(F, opt).b_z == b_of("s"));
}

TEST_CASE("variety annihilator") {
  auto R = make_polynomial_ring({"x", "y"});
  auto F = Ps({"x^2+y^3", "x*y"}, R);
  auto a = sannfs_var(F);
  for (const auto& g : a.generators()) CHECK(apply_to_fs(g, F).is_zero());
  VarOptions lex;
  lex.ordering = VarOrdering::LexBlock;
  auto b = sannfs_var(F, lex);
  CHECK(th::same_left_ideal(a.algebra, ann_in(a), ann_in(b, a)));

  // r = 1: the image of the D[s] annihilator under s -> s_1_1
  auto f = P("x^3+y^2+x*y^2", R);
  auto v = sannfs_var({f});
  auto bm = annfs_bm(f);
  const std::string s11 = v.algebra->name(*v.algebra->find_role(VarRole::Sij, 0, 0));
  std::vector<NcPoly> renamed;
  for (const auto& g : bm.generators())
    renamed.push_back(P(std::regex_replace(g.to_string(), std::regex("\\bs\\b"), s11), v.algebra));
  CHECK(th::same_left_ideal(v.algebra, ann_in(v), renamed));
}

TEST_CASE("variety ordering presets") {
  auto A = make_var_ann_algebra({"x0", "y0", "x1", "y1"}, 2);
  for (auto kind : {VarOrdering::Weighted, VarOrdering::LexBlock}) {
    auto o = var_ann_ordering(*A, kind);
    auto ctx = A->with_ordering(o);
    CHECK(validate_presentation(*ctx).ok);
    // any Dt beats any monomial free of Dt
    CHECK(o.cmp(Mono::var(*A->find_role(VarRole::Dt, 0)), Mono::var(*A->find_role(VarRole::Sij, 0, 0), 7)) > 0);
    // s_ii weighs twice s_ij
    CHECK(o.cmp(Mono::var(*A->find_role(VarRole::Sij, 0, 0)), Mono::var(*A->find_role(VarRole::Sij, 0, 1))) > 0);
  }
}
