#include <doctest.h>

#include <momsolve/errors.hpp>
#include <momsolve/variety.hpp>

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "test_util.hpp"

using namespace momsolve;
using momsolve::test::Rng;

namespace {

UniPoly up(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.push_back(Rational(v));
  return UniPoly(std::move(c));
}

Poly2 p2(std::initializer_list<std::pair<Mono, Rational>> terms) {
  Poly2 p;
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

RelationPoly rel(Mono dependent, const Poly2& rhs) {
  Poly2 p = rhs;
  p.add_term(dependent, Rational(-1));
  return RelationPoly{dependent, p};
}

void check_points(const Variety& v, const std::vector<std::pair<double, double>>& expected,
                  double tol) {
  REQUIRE(v.points.size() == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CHECK(std::abs(v.points[k].x - expected[k].first) <= tol);
    CHECK(std::abs(v.points[k].y - expected[k].second) <= tol);
  }
}

constexpr double kSqrt13 = 3.6055512754639893;

}  // namespace

TEST_SUITE("variety") {

TEST_CASE("unipoly canonical form and basic queries") {
  CHECK(UniPoly({Rational(1), Rational(0), Rational(0)}).degree() == 0);
  CHECK(UniPoly({Rational(0), Rational(0)}).is_zero());
  CHECK(up({0, 0, 3}).degree() == 2);
  CHECK(up({1, 2}).coeff(0) == Rational(1));
  CHECK(up({1, 2}).coeff(5) == Rational(0));
  CHECK(up({1, 2, 3}).leading() == Rational(3));
  CHECK(up({-6, 11, -6, 1}).eval_exact(Rational(2)) == Rational(0));
  CHECK(up({-6, 11, -6, 1}).eval(2.0) == 0.0);
  CHECK(UniPoly::constant(Rational(5)).degree() == 0);
}

TEST_CASE("unipoly arithmetic, division, gcd") {
  UniPoly a = up({-1, 0, 1});                 // x^2 - 1
  UniPoly b = up({-1, 1});                    // x - 1
  CHECK(a + b == up({-2, 1, 1}));
  CHECK(a - a == UniPoly());
  CHECK(b * up({1, 1}) == a);
  CHECK(a.derivative() == up({0, 2}));
  CHECK(up({4, 0, 2}).monic() == UniPoly({Rational(2), Rational(0), Rational(1)}));

  auto [q, r] = UniPoly::divmod(a, b);
  CHECK(q == up({1, 1}));
  CHECK(r.is_zero());
  auto [q2, r2] = UniPoly::divmod(up({1, 0, 1}), up({-1, 1}));
  CHECK(q2 == up({1, 1}));
  CHECK(r2 == up({2}));
  CHECK_THROWS(UniPoly::divmod(a, UniPoly()));

  // gcd((x-1)(x+2), (x-1)(x-3)) = x - 1, monic.
  CHECK(UniPoly::gcd(Rational(-4) * up({-2, 1, 1}), up({3, -4, 1})) == up({-1, 1}));
  CHECK(UniPoly::gcd(UniPoly(), up({2, 4})) == up({2, 4}).monic());
  CHECK(UniPoly::gcd(UniPoly(), UniPoly()).is_zero());
}

TEST_CASE("squarefree part drops multiplicities and keeps roots") {
  // (x-2)^2 (x+1) -> (x-2)(x+1), monic.
  UniPoly p = up({-2, 1}) * up({-2, 1}) * up({1, 1});
  CHECK(p.squarefree_part() == up({-2, 1}) * up({1, 1}));
  CHECK(up({-1, 1}).squarefree_part() == up({-1, 1}));
}

TEST_CASE("resultant eliminates y with the textbook conventions") {
  // Res_y(a1 y + a0, b2 y^2 + b1 y + b0) = a0^2 b2 - a0 a1 b1 + a1^2 b0.
  // With p = x y - 1 and q = y^2 - x: 1 - x^3.
  Poly2 p = p2({{Mono{1, 1}, Rational(1)}, {Mono{0, 0}, Rational(-1)}});
  Poly2 q = p2({{Mono{0, 2}, Rational(1)}, {Mono{1, 0}, Rational(-1)}});
  CHECK(resultant_y(p, q) == up({1, 0, 0, -1}));

  // Two polynomials linear in y: Res = a1 b0 - a0 b1. With y - x and y - 3: x - 3.
  Poly2 l1 = p2({{Mono{0, 1}, Rational(1)}, {Mono{1, 0}, Rational(-1)}});
  Poly2 l2 = p2({{Mono{0, 1}, Rational(1)}, {Mono{0, 0}, Rational(-3)}});
  CHECK(resultant_y(l1, l2) == up({-3, 1}));

  // Circle and hyperbola: Res_y(x^2 + y^2 - 4, x y - 1) = x^4 - 4 x^2 + 1.
  Poly2 circle = p2({{Mono{2, 0}, Rational(1)}, {Mono{0, 2}, Rational(1)}, {Mono{0, 0}, Rational(-4)}});
  Poly2 hyper = p2({{Mono{1, 1}, Rational(1)}, {Mono{0, 0}, Rational(-1)}});
  CHECK(resultant_y(circle, hyper) == up({1, 0, -4, 0, 1}));

  // Both y-free: the empty Sylvester determinant is 1.
  CHECK(resultant_y(p2({{Mono{2, 0}, Rational(1)}, {Mono{0, 0}, Rational(-1)}}),
                    p2({{Mono{1, 0}, Rational(1)}, {Mono{0, 0}, Rational(2)}})) == up({1}));

  // One y-free argument: raised to the other's y-degree.
  CHECK(resultant_y(p2({{Mono{1, 0}, Rational(1)}}), q) == up({0, 0, 1}));

  CHECK_THROWS_AS(resultant_y(l1, l1), IdenticallyZeroResultant);
  CHECK_THROWS_AS(resultant_y(Poly2(), q), std::invalid_argument);
}

TEST_CASE("resultant_x mirrors resultant_y") {
  // Res_x(x - y^2, x - 1) as a polynomial in y: 1 - y^2 up to sign convention.
  Poly2 par = p2({{Mono{1, 0}, Rational(1)}, {Mono{0, 2}, Rational(-1)}});
  Poly2 line = p2({{Mono{1, 0}, Rational(1)}, {Mono{0, 0}, Rational(-1)}});
  UniPoly r = resultant_x(par, line);
  CHECK(r.degree() == 2);
  CHECK(r.eval_exact(Rational(1)) == Rational(0));
  CHECK(r.eval_exact(Rational(-1)) == Rational(0));
}

TEST_CASE("real_roots isolates the reference quartic") {
  // 16x^4 + 8x^3 - 32x^2 - 6x + 9 = (2x-1)(2x+3)(4x^2-2x-3).
  UniPoly q = up({9, -6, -32, 8, 16});
  auto roots = real_roots(q, 1e-12);
  REQUIRE(roots.size() == 4);
  CHECK(std::abs(roots[0] - (-1.5)) <= 1e-10);
  CHECK(std::abs(roots[1] - (1 - kSqrt13) / 4) <= 1e-10);
  CHECK(std::abs(roots[2] - 0.5) <= 1e-10);
  CHECK(std::abs(roots[3] - (1 + kSqrt13) / 4) <= 1e-10);
}

TEST_CASE("real_roots corner cases") {
  auto lin = real_roots(up({-2, 3}), 1e-10);
  REQUIRE(lin.size() == 1);
  CHECK(std::abs(lin[0] - 2.0 / 3.0) <= 1e-15);
  auto dbl = real_roots(up({4, -4, 1}), 1e-10);  // (x-2)^2
  REQUIRE(dbl.size() == 1);
  CHECK(std::abs(dbl[0] - 2) <= 1e-10);
  CHECK(real_roots(up({1, 0, 1}), 1e-10).empty());
  CHECK(real_roots(up({7}), 1e-10).empty());
  CHECK_THROWS_AS(real_roots(UniPoly(), 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(real_roots(up({1, 1}), 0.0), std::invalid_argument);

  auto cubic = real_roots(up({-6, 11, -6, 1}), 1e-12);
  REQUIRE(cubic.size() == 3);
  CHECK(std::abs(cubic[0] - 1) <= 1e-10);
  CHECK(std::abs(cubic[1] - 2) <= 1e-10);
  CHECK(std::abs(cubic[2] - 3) <= 1e-10);

  // An exact root can land on a bisection midpoint; 0 and +-1 are found.
  auto sym = real_roots(up({0, -1, 0, 1}), 1e-12);  // x^3 - x
  REQUIRE(sym.size() == 3);
  CHECK(std::abs(sym[0] + 1) <= 1e-12);
  CHECK(std::abs(sym[1]) <= 1e-12);
  CHECK(std::abs(sym[2] - 1) <= 1e-12);
}

TEST_CASE("real_roots is invariant under scaling") {
  UniPoly base = up({-3, 0, 1});  // x^2 - 3
  auto r1 = real_roots(base, 1e-12);
  auto r2 = real_roots(Rational(1000) * base, 1e-12);
  auto r3 = real_roots(Rational(1, 1000) * base, 1e-12);
  REQUIRE(r1.size() == 2);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(std::abs(r1[k] - r2[k]) <= 1e-12);
    CHECK(std::abs(r1[k] - r3[k]) <= 1e-12);
  }
}

TEST_CASE("property: products of random distinct linear factors") {
  Rng rng(6001);
  for (int n = 0; n < 50; ++n) {
    int count = rng.uniform_int(1, 5);
    std::vector<Rational> roots;
    while (static_cast<int>(roots.size()) < count) {
      Rational r = rng.rational(8, 4);
      bool dup = false;
      for (const auto& s : roots) dup = dup || s == r;
      if (!dup) roots.push_back(r);
    }
    UniPoly p = UniPoly::constant(rng.nonzero_rational(5, 3));
    for (const auto& r : roots) p = p * UniPoly({-r, Rational(1)});
    if (n % 3 == 0) p = p * up({1, 0, 1});            // irreducible quadratic factor
    if (n % 4 == 0) p = p * UniPoly({-roots[0], Rational(1)});  // repeated root
    auto found = real_roots(p, 1e-12);
    std::vector<double> expected;
    for (const auto& r : roots) expected.push_back(r.to_double());
    std::sort(expected.begin(), expected.end());
    REQUIRE(found.size() == expected.size());
    for (std::size_t k = 0; k < found.size(); ++k)
      CHECK(std::abs(found[k] - expected[k]) <= 1e-9 * (1 + std::abs(expected[k])));
  }
}

TEST_CASE("common_zeros recovers the two-atom support through substitution") {
  // Relations of the flat two-atom extension: Y = 1/2 - 1/2 X, X^2 = 1, ...
  std::vector<RelationPoly> rels{
      rel(Mono{0, 1}, p2({{Mono{0, 0}, Rational(1, 2)}, {Mono{1, 0}, Rational(-1, 2)}})),
      rel(Mono{2, 0}, p2({{Mono{0, 0}, Rational(1)}})),
      rel(Mono{1, 1}, p2({{Mono{0, 0}, Rational(-1, 2)}, {Mono{1, 0}, Rational(1, 2)}})),
      rel(Mono{0, 2}, p2({{Mono{0, 0}, Rational(1, 2)}, {Mono{1, 0}, Rational(-1, 2)}}))};
  Variety v = common_zeros(rels, 1e-9);
  check_points(v, {{-1, 1}, {1, 0}}, 1e-12);
  for (const auto& p : v.points) CHECK(p.residual <= 1e-9);
}

TEST_CASE("common_zeros recovers the three-atom support") {
  // X^2 = X, XY = X + Y - 1, Y^2 = 2 - 2X - Y.
  std::vector<RelationPoly> rels{
      rel(Mono{2, 0}, p2({{Mono{1, 0}, Rational(1)}})),
      rel(Mono{1, 1}, p2({{Mono{0, 0}, Rational(-1)}, {Mono{1, 0}, Rational(1)}, {Mono{0, 1}, Rational(1)}})),
      rel(Mono{0, 2}, p2({{Mono{0, 0}, Rational(2)}, {Mono{1, 0}, Rational(-2)}, {Mono{0, 1}, Rational(-1)}}))};
  check_points(common_zeros(rels, 1e-9), {{0, 1}, {1, -1}, {1, 0}}, 1e-9);
}

TEST_CASE("common_zeros on the Greater-branch parabola pair") {
  Poly2 rhs = p2({{Mono{0, 0}, Rational(3, 4)}, {Mono{1, 0}, Rational(-1, 4)},
                  {Mono{0, 1}, Rational(3, 4)}});
  std::vector<RelationPoly> rels{rel(Mono{2, 0}, rhs), rel(Mono{0, 2}, rhs)};
  Variety v = common_zeros(rels, 1e-9);
  check_points(v,
               {{-1.5, 1.5},
                {(1 - kSqrt13) / 4, (1 - kSqrt13) / 4},
                {0.5, -0.5},
                {(1 + kSqrt13) / 4, (1 + kSqrt13) / 4}},
               1e-9);
}

TEST_CASE("common_zeros on the Less-branch relations matches the reference points") {
  std::vector<RelationPoly> rels{
      rel(Mono{1, 1}, p2({{Mono{0, 0}, Rational(-19, 11)}, {Mono{1, 0}, Rational(31, 22)},
                          {Mono{0, 1}, Rational(17, 22)}})),
      rel(Mono{0, 2}, p2({{Mono{0, 0}, Rational(292, 121)}, {Mono{1, 0}, Rational(-1269, 242)},
                          {Mono{0, 1}, Rational(-615, 242)}, {Mono{2, 0}, Rational(21, 11)}}))};
  Variety v = common_zeros(rels, 1e-9);
  check_points(v, {{-0.8078, 1.813}, {0.9523, -2.1455}, {1.1039, -0.5186}, {3.0437, 1.128}},
               1.2e-3);
  for (const auto& p : v.points) CHECK(p.residual <= 1e-7);
}

TEST_CASE("common_zeros intersects a circle with a hyperbola") {
  std::vector<RelationPoly> rels{
      rel(Mono{0, 2}, p2({{Mono{0, 0}, Rational(4)}, {Mono{2, 0}, Rational(-1)}})),
      rel(Mono{1, 1}, p2({{Mono{0, 0}, Rational(1)}}))};
  constexpr double big = 1.9318516525781366, small = 0.5176380902050415;
  check_points(common_zeros(rels, 1e-9),
               {{-big, -small}, {-small, -big}, {small, big}, {big, small}}, 1e-9);
}

TEST_CASE("common_zeros handles vertical lines") {
  // X = 3/2 and Y^2 = 4.
  std::vector<RelationPoly> rels{
      rel(Mono{1, 0}, p2({{Mono{0, 0}, Rational(3, 2)}})),
      rel(Mono{0, 2}, p2({{Mono{0, 0}, Rational(4)}}))};
  check_points(common_zeros(rels, 1e-9), {{1.5, -2}, {1.5, 2}}, 1e-12);
}

TEST_CASE("common_zeros rejects positive-dimensional zero sets") {
  // A single conic cuts out a curve.
  std::vector<RelationPoly> circle{
      rel(Mono{0, 2}, p2({{Mono{0, 0}, Rational(4)}, {Mono{2, 0}, Rational(-1)}}))};
  CHECK_THROWS_AS(common_zeros(circle, 1e-9), InfiniteVariety);

  // Proportional relations carry no more information than one of them.
  Poly2 base = p2({{Mono{0, 2}, Rational(-1)}, {Mono{0, 0}, Rational(4)}, {Mono{2, 0}, Rational(-1)}});
  std::vector<RelationPoly> pair{RelationPoly{Mono{0, 2}, base},
                                 RelationPoly{Mono{0, 2}, base * Rational(2)}};
  CHECK_THROWS_AS(common_zeros(pair, 1e-9), InfiniteVariety);

  // Two relations describing the same line.
  std::vector<RelationPoly> lines{
      rel(Mono{0, 1}, p2({{Mono{0, 0}, Rational(1)}, {Mono{1, 0}, Rational(-1)}})),
      RelationPoly{Mono{0, 1}, p2({{Mono{0, 0}, Rational(2)}, {Mono{1, 0}, Rational(-2)},
                                   {Mono{0, 1}, Rational(-2)}})}};
  CHECK_THROWS_AS(common_zeros(lines, 1e-9), InfiniteVariety);
}

TEST_CASE("common_zeros returns empty sets for inconsistent relations") {
  // X = 0 and X = 1 cannot hold together.
  std::vector<RelationPoly> rels{rel(Mono{1, 0}, Poly2()),
                                 rel(Mono{1, 0}, p2({{Mono{0, 0}, Rational(1)}}))};
  CHECK(common_zeros(rels, 1e-9).points.empty());

  // X^2 = -1 alone has no real solutions at all.
  std::vector<RelationPoly> none{rel(Mono{2, 0}, p2({{Mono{0, 0}, Rational(-1)}}))};
  CHECK(common_zeros(none, 1e-9).points.empty());

  // X^2 = 1 alone pins x but leaves y free: two vertical lines.
  std::vector<RelationPoly> lines{rel(Mono{2, 0}, p2({{Mono{0, 0}, Rational(1)}}))};
  CHECK_THROWS_AS(common_zeros(lines, 1e-9), InfiniteVariety);
}

TEST_CASE("common_zeros validates its arguments") {
  CHECK_THROWS_AS(common_zeros({}, 1e-9), std::invalid_argument);
  std::vector<RelationPoly> rels{rel(Mono{1, 0}, Poly2())};
  CHECK_THROWS_AS(common_zeros(rels, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(common_zeros(rels, -1e-9), std::invalid_argument);
}

TEST_CASE("common_zeros filters candidates through every relation") {
  // Substituting Y = X leaves x^2 - 1 and x - 1; only x = 1 survives both.
  std::vector<RelationPoly> rels{
      rel(Mono{0, 1}, p2({{Mono{1, 0}, Rational(1)}})),
      rel(Mono{2, 0}, p2({{Mono{0, 0}, Rational(1)}})),
      rel(Mono{1, 0}, p2({{Mono{0, 0}, Rational(1)}}))};
  check_points(common_zeros(rels, 1e-9), {{1, 1}}, 1e-12);
}

TEST_CASE("common_zeros output is deterministic and sorted") {
  Poly2 rhs = p2({{Mono{0, 0}, Rational(3, 4)}, {Mono{1, 0}, Rational(-1, 4)},
                  {Mono{0, 1}, Rational(3, 4)}});
  std::vector<RelationPoly> rels{rel(Mono{2, 0}, rhs), rel(Mono{0, 2}, rhs)};
  Variety a = common_zeros(rels, 1e-9);
  Variety b = common_zeros(rels, 1e-9);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    CHECK(a.points[k].x == b.points[k].x);
    CHECK(a.points[k].y == b.points[k].y);
    if (k) CHECK((a.points[k - 1].x < a.points[k].x ||
                  (a.points[k - 1].x == a.points[k].x && a.points[k - 1].y < a.points[k].y)));
  }
}

}  // TEST_SUITE
