#include "doctest.h"
#include "bfun/bsato.hpp"
#include "helpers.hpp"

using namespace bfun;
using th::P;
using th::Ps;

namespace {

bool same(const FsElement& a, const FsElement& b) { return a.num == b.num && a.den == b.den; }

bool homogeneous(const NcPoly& p, const std::vector<std::int64_t>& wt) {
  for (const auto& t : p.terms())
    if (weighted_degree(t.m, wt) != weighted_degree(p.lm(), wt)) return false;
  return true;
}

}  // namespace

TEST_CASE("constructed algebras are valid") {
  std::vector<AlgebraPtr> algs{make_weyl(3),
                               make_weyl_s({"x", "y"}, 2),
                               make_bm_algebra({"x", "y"}, 2),
                               make_malgrange_algebra({"x", "y"}, 2),
                               make_var_ann_algebra({"x", "y"}, 3),
                               make_gl_weyl_algebra({"x"}, 2),
                               make_usl2()};
  for (const auto& a : algs) CHECK(validate_presentation(*a).ok);
  CHECK(make_weyl(2)->name(0) == "x1");
  CHECK(make_weyl(2)->name(2) == "Dx1");
}

TEST_CASE("homogenization") {
  auto D = make_weyl({"x"});
  auto H = make_homogenized(D, {1, 1}, D->ordering());
  CHECK(homogenize(P("Dx^2+x", D), H, {1, 1}) == P("Dx^2+x*h", H));
  CHECK(homogenize(P("x*Dx", D), H, {1, 1}) == P("x*Dx", H));
  // Dx x = x Dx + h^2 in the homogenized algebra
  CHECK(lie_bracket(P("Dx", H), P("x", H)) == P("h^2", H));
  CHECK(validate_presentation(*H).ok);

  auto H2 = make_homogenized(D, {2, 1}, D->ordering());
  CHECK(homogenize(P("Dx^2+x", D), H2, {2, 1}) == P("Dx^2+x", H2));

  std::mt19937 rng(4);
  auto D2 = make_weyl({"x", "y"});
  std::vector<std::int64_t> wt{1, 2, 3, 1};
  auto H3 = make_homogenized(D2, wt, D2->ordering());
  std::vector<std::int64_t> hw = wt;
  hw.push_back(1);
  for (int k = 0; k < 10; ++k) {
    auto p = th::random_poly(rng, D2, 4, 3);
    auto hp = homogenize(p, H3, wt);
    CHECK(homogeneous(hp, hw));
    CHECK(dehomogenize(hp, D2) == p);
  }
}

TEST_CASE("initial forms") {
  auto D = make_weyl({"x"});
  auto w = vfiltration_weights(*D, {Rational(1)});
  CHECK(initial_form(P("x*Dx+1", D), w) == P("x*Dx+1", D));
  CHECK(initial_form(NcPoly(D), w).is_zero());
  CHECK(initial_form(P("x^2*Dx+Dx^2", D), w) == P("Dx^2", D));

  auto R = make_polynomial_ring({"x"});
  auto M = malgrange_ideal({P("x^2+x", R)});
  auto wm = vfiltration_weights(*M.algebra, {Rational(1), Rational(0)});
  CHECK(initial_form(P("t-x^2-x", M.algebra), wm) == P("-x^2-x", M.algebra));
}

TEST_CASE("Malgrange and BM ideals") {
  auto R = make_polynomial_ring({"x"});
  auto M = malgrange_ideal({P("x", R)});
  CHECK(M.gens == Ps({"t-x", "Dx+Dt"}, M.algebra));
  auto B = bm_ideal({P("x", R)});
  CHECK(B.gens == Ps({"s+x*Dt", "Dx+Dt"}, B.algebra));

  auto R2 = make_polynomial_ring({"x", "y"});
  auto B2 = bm_ideal(Ps({"x", "y"}, R2));
  CHECK(th::same_left_ideal(B2.algebra, B2.gens, Ps({"s1+x*Dt1", "s2+y*Dt2", "Dx+Dt1", "Dy+Dt2"}, B2.algebra)));
  CHECK(bm_ideal({P("x^3+y^2+x*y^2", R2)}).gens.size() == 3);

  auto R4 = make_polynomial_ring({"x0", "y0", "x1", "y1"});
  auto M8 = malgrange_ideal(Ps({"x0^2+y0^3", "2*x0*x1+3*y0^2*y1"}, R4));
  CHECK(M8.gens.size() == 6);
  CHECK(M8.algebra->nvars() == 12);
  auto one = malgrange_ideal({P("1", R2)});
  CHECK(one.gens == Ps({"t-1", "Dx", "Dy"}, one.algebra));
}

TEST_CASE("action on f^s") {
  auto R = make_polynomial_ring({"x", "y"});
  auto f = P("x^3+y^2+x*y^2", R);
  FsModule M({f});
  auto B = bm_ideal({f});
  for (const auto& g : B.gens) CHECK(M.apply(g).is_zero());
  auto Mal = malgrange_ideal({f});
  for (const auto& g : Mal.gens) CHECK(M.apply(g).is_zero());

  // Dx f^s = s f_x / f f^s
  auto W = make_weyl_s({"x", "y"}, 1);
  auto e = M.apply(P("Dx", W));
  CHECK(e.den == std::vector<int>{1});
  CHECK(e.num == P("3*s*x^2+s*y^2", M.ring()));
  // f Dx - s f_x kills f^s
  CHECK(M.apply(P("(x^3+y^2+x*y^2)*Dx-s*(3*x^2+y^2)", W)).is_zero());

  // Dt lowers, t raises
  auto Mi = make_malgrange_algebra({"x", "y"}, 1);
  auto u = M.apply(P("t*Dt", Mi));
  CHECK((u.den.empty() || u.den == std::vector<int>{0}));
  CHECK(u.num == P("-s-1", M.ring()));
}

TEST_CASE("the action is a module action") {
  std::mt19937 rng(8);
  auto R = make_polynomial_ring({"x", "y"});
  std::vector<NcPoly> F{P("x^2+y^3", R), P("x*y", R)};
  FsModule M(F);
  std::vector<AlgebraPtr> algs{make_weyl_s({"x", "y"}, 2), make_malgrange_algebra({"x", "y"}, 2),
                               make_bm_algebra({"x", "y"}, 2), make_var_ann_algebra({"x", "y"}, 2)};
  for (const auto& A : algs)
    for (int k = 0; k < 5; ++k) {
      auto p = th::random_poly(rng, A, 3, 2), q = th::random_poly(rng, A, 3, 2);
      CHECK(same(M.apply(p * q), M.apply(p, M.apply(q))));
      CHECK(same(M.apply(p + q), M.apply(q + p)));
    }
}

TEST_CASE("sij action") {
  auto R = make_polynomial_ring({"x", "y"});
  std::vector<NcPoly> F{P("x", R), P("y", R)};
  auto A = make_var_ann_algebra({"x", "y"}, 2);
  auto V = var_ann_ideal(F);
  for (const auto& g : V.gens) CHECK(apply_to_fs(g, F).is_zero());
  // s_11 acts as s_1
  FsModule M(F);
  auto e = M.apply(P("s_1_1", A));
  CHECK(e.num == P("s1", M.ring()));
  // s_12 f^s = s_1 f_2 / f_1 f^s
  auto e12 = M.apply(P("s_1_2", A));
  CHECK(e12.num == P("s1*y", M.ring()));
  CHECK(e12.den == std::vector<int>{1, 0});
}

TEST_CASE("quasi-homogeneous weights") {
  auto R = make_polynomial_ring({"x", "y"});
  CHECK(quasi_homogeneous_weights({P("x^3+y^2", R)}) == std::vector<std::int64_t>{2, 3});
  CHECK(quasi_homogeneous_weights({P("x^3+y^2+x*y^2", R)}).empty());
  auto R3 = make_polynomial_ring({"x1", "x2", "x3"});
  auto F = Ps({"x1^3-x2*x3", "x2^2-x1*x3", "x3^2-x1^2*x2"}, R3);
  CHECK(quasi_homogeneous_weights(F) == std::vector<std::int64_t>{3, 4, 5});
}

TEST_CASE("Noro weights make the Malgrange generators homogeneous") {
  auto R = make_polynomial_ring({"x", "y"});
  auto f = P("x^3+y^2", R);
  auto M = malgrange_ideal({f});
  auto wt = noro_weights(*M.algebra, f, {2, 3});
  // (t, x, y, Dx, Dy, Dt)
  CHECK(wt == std::vector<std::int64_t>{6, 2, 3, 5, 4, 1});
  for (const auto& g : M.gens) CHECK(homogeneous(g, wt));

  auto R3 = make_polynomial_ring({"x1", "x2", "x3"});
  auto F = Ps({"x1^3-x2*x3", "x2^2-x1*x3", "x3^2-x1^2*x2"}, R3);
  auto M3 = malgrange_ideal(F);
  auto w3 = noro_weights(*M3.algebra, F, {3, 4, 5});
  for (const auto& g : M3.gens) CHECK(homogeneous(g, w3));
  for (auto v : w3) CHECK(v > 0);
}

TEST_CASE("initial ideal of a Malgrange ideal") {
  auto R = make_polynomial_ring({"x"});
  auto M = malgrange_ideal({P("x", R)});
  auto w = vfiltration_weights(*M.algebra, {Rational(1), Rational(0)});
  auto G = initial_ideal(M, w, {1, 1, 1, 1});
  // in = <x, Dt>: B(t Dt) = t Dt, so b(s) = B(-s-1) is s + 1 up to sign
  CHECK(th::same_left_ideal(G.algebra(), G.elements(), Ps({"x", "Dt"}, G.algebra())));
  CHECK(G.contains(P("t*Dt", G.algebra())));

  auto Z = initial_ideal(DIdeal{M.algebra, {}}, w, {1, 1, 1, 1});
  CHECK(Z.size() == 0);
}
