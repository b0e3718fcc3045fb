#include "doctest.h"
#include "bfun/bsato.hpp"
#include "helpers.hpp"

using namespace bfun;
using th::P;
using th::Ps;

namespace {

UniPoly uni(const std::vector<int>& c) {
  std::vector<Rational> r;
  for (int v : c) r.emplace_back(v);
  return UniPoly(std::move(r));
}

}  // namespace

TEST_CASE("principal intersection basics") {
  auto R = make_polynomial_ring({"s"});
  auto J = buchberger(R, {P("s-1", R)});
  CHECK(principal_intersect(P("s", R), J) == uni({-1, 1}));

  auto X = make_polynomial_ring({"x"});
  CHECK(principal_intersect(P("x", X), buchberger(X, {P("x^2-2", X)})) == uni({-2, 0, 1}));

  auto R2 = make_polynomial_ring({"x", "y"});
  CHECK_THROWS_AS(principal_intersect(P("y", R2), buchberger(R2, {P("x", R2)})), ProvablyZero);

  PrincipalOptions small;
  small.cap = 3;
  auto G = buchberger(R2, Ps({"x^5-y", "y^2-y"}, R2));
  CHECK_THROWS_AS(principal_intersect(P("x", R2), G, small), CapExceeded);
}

TEST_CASE("zero intersection detection") {
  auto R = make_polynomial_ring({"x", "y"});
  CHECK(detect_zero_intersection(P("y", R), buchberger(R, {P("x", R)})) == ZeroTest::ProvablyZero);
  CHECK(detect_zero_intersection(P("y", R), buchberger(R, {P("y^2+x", R)})) == ZeroTest::Inconclusive);
  CHECK(detect_zero_intersection(P("x", R), buchberger(R, {P("x", R)})) == ZeroTest::Inconclusive);
}

TEST_CASE("both recurrences agree with direct normal forms") {
  std::mt19937 rng(21);
  auto U = make_usl2();
  auto J = two_sided_gb(U, Ps({"e^3", "f^3", "h^3-h"}, U));
  auto D = make_weyl({"x", "y"});
  for (int k = 0; k < 4; ++k) {
    auto s = th::random_poly(rng, U, 3, 2);
    auto L = power_normal_forms(s, J, 6, PrincipalOptions::Recurrence::Left);
    auto B = power_normal_forms(s, J, 6, PrincipalOptions::Recurrence::Bracket);
    for (int i = 0; i <= 6; ++i) {
      auto direct = J.normal_form(power(s, static_cast<unsigned>(i)));
      CHECK(L[static_cast<std::size_t>(i)] == direct);
      CHECK(B[static_cast<std::size_t>(i)] == direct);
    }
  }
  for (int k = 0; k < 4; ++k) {
    auto G = buchberger(D, {th::random_poly(rng, D, 3, 2), th::random_poly(rng, D, 3, 2)});
    auto s = th::random_poly(rng, D, 2, 2);
    auto L = power_normal_forms(s, G, 5);
    auto B = power_normal_forms(s, G, 5, PrincipalOptions::Recurrence::Bracket);
    for (int i = 0; i <= 5; ++i) {
      auto direct = G.normal_form(power(s, static_cast<unsigned>(i)));
      CHECK(L[static_cast<std::size_t>(i)] == direct);
      CHECK(B[static_cast<std::size_t>(i)] == direct);
    }
  }
}

TEST_CASE("the minimal polynomial lies in the ideal") {
  auto U = make_usl2();
  auto J = two_sided_gb(U, Ps({"e^3", "f^3", "h^3-h"}, U));
  auto s = P("4*e*f+h^2-2*h", U);
  PrincipalOptions bracket;
  bracket.recurrence = PrincipalOptions::Recurrence::Bracket;
  auto b = principal_intersect(s, J), b2 = principal_intersect(s, J, bracket);
  CHECK(b == b2);
  CHECK(J.contains(b.evaluate(s)));
  // no proper divisor of lower degree vanishes: the roots are simple here
  auto r = rational_roots(b);
  CHECK(r.residual.degree() == 0);
  for (const auto& [root, m] : r.roots) {
    auto q = b.divmod(UniPoly::linear_root(root)).first;
    CHECK_FALSE(J.contains(q.evaluate(s)));
  }
}

TEST_CASE("dependency basis invariants") {
  std::mt19937 rng(3);
  auto R = make_polynomial_ring({"x", "y"});
  DependencyBasis db;
  std::uniform_int_distribution<int> c(-3, 3);
  int found = 0;
  for (int k = 0; k < 12; ++k) {
    auto p = th::random_poly(rng, R, 3, 1);
    detail::IPoly v = detail::to_ipoly(p);
    DependencyBasis::Combination comb(12, Rational(0));
    comb[static_cast<std::size_t>(k)] = 1;
    if (auto dep = db.add(v, comb)) ++found;
    CHECK(db.consistent());
  }
  // 3 monomials of degree <= 1: at most rank 3
  CHECK(db.rank() <= 3);
  CHECK(found == 12 - static_cast<int>(db.rank()));
}

TEST_CASE("intersect up to a degree") {
  auto R = make_polynomial_ring({"u", "x", "y"});
  auto J = buchberger(R, Ps({"x-u^2", "y-u^3"}, R));
  auto res = intersect_up_to(Ps({"x", "y"}, R), J, 6);
  REQUIRE(res.basis.size() == 1);
  auto want = P("s2^2-s1^3", res.ring);
  CHECK(res.basis[0] == want.monic());

  auto Z = buchberger(R, Ps({"u-1", "x-1", "y-1"}, R));
  auto rz = intersect_up_to(Ps({"x", "y"}, R), Z, 3);
  CHECK(rz.complete);
  CHECK(th::same_left_ideal(rz.ring, rz.basis, Ps({"s1-1", "s2-1"}, rz.ring)));
  CHECK(rz.basis.size() == 2);

  // r = 1 matches the principal search
  auto X = make_polynomial_ring({"x"});
  auto G = buchberger(X, {P("x^3-x", X)});
  auto r1 = intersect_up_to({P("x", X)}, G, 4);
  REQUIRE(r1.basis.size() == 1);
  CHECK(r1.basis[0] == P("s1^3-s1", r1.ring));
}

TEST_CASE("univariate projections") {
  auto R = make_polynomial_ring({"x", "y"});
  auto p = solve_univariate_projections(R, Ps({"x^2-2", "y-x"}, R));
  REQUIRE(p.size() == 2);
  CHECK(p[0] == uni({-2, 0, 1}));
  CHECK(p[1] == uni({-2, 0, 1}));
  auto q = solve_univariate_projections(R, Ps({"x", "y"}, R));
  CHECK(q[0] == uni({0, 1}));
  CHECK(q[1] == uni({0, 1}));
  CHECK(solve_univariate_projections(R, Ps({"x^2-y", "y^2-1"}, R))[0] == uni({-1, 0, 0, 0, 1}));
  CHECK_THROWS_AS(solve_univariate_projections(R, {P("x", R)}), NotZeroDimensional);
}
