#include <doctest.h>

#include <momsolve/linalg.hpp>

#include "test_util.hpp"

using namespace momsolve;
using momsolve::test::Rng;

namespace {

Rational quad_form(const SymMatrix& m, const std::vector<Rational>& v) {
  Rational s;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) s += v[i] * m.at(i, j) * v[j];
  return s;
}

RectMatrix random_rect(Rng& rng, int rows, int cols, int bound = 6, int max_den = 4) {
  RectMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational(bound, max_den);
  return m;
}

SymMatrix random_gram(Rng& rng, int dim, int inner) {
  RectMatrix g = random_rect(rng, inner, dim);
  return *SymMatrix::from_rect(g.transpose() * g);
}

const SymMatrix kM1Singular{{Rational(5), Rational(1), Rational(2)},
                            {Rational(1), Rational(5), Rational(-2)},
                            {Rational(2), Rational(-2), Rational(2)}};

const SymMatrix kM1Definite{{Rational(3), Rational(2), Rational(0)},
                            {Rational(2), Rational(2), Rational(-1)},
                            {Rational(0), Rational(-1), Rational(2)}};

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rect matrix basics") {
  RectMatrix a{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
  CHECK(a.at(1, 0) == Rational(3));
  CHECK(a.transpose().at(0, 1) == Rational(3));
  RectMatrix i2 = RectMatrix::identity(2);
  CHECK(a * i2 == a);
  CHECK(i2 * a == a);
  CHECK(a + a - a == a);
  RectMatrix b{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  CHECK((a * b).at(0, 0) == Rational(2));
  CHECK(a.col(1) == std::vector<Rational>{Rational(2), Rational(4)});
  CHECK(a.row(1) == std::vector<Rational>{Rational(3), Rational(4)});
}

TEST_CASE("sym matrix construction enforces symmetry") {
  CHECK_THROWS(SymMatrix{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}});
  RectMatrix asym{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
  CHECK(!SymMatrix::from_rect(asym).has_value());
  CHECK(SymMatrix::from_rect(asym + asym.transpose()).has_value());
  SymMatrix s(2);
  s.set(0, 1, Rational(7));
  CHECK(s.at(1, 0) == Rational(7));
}

TEST_CASE("exact rank") {
  CHECK(rank(kM1Singular) == 2);
  CHECK(rank(kM1Definite) == 3);
  CHECK(rank(RectMatrix(3, 3)) == 0);
  CHECK(rank(RectMatrix::identity(4)) == 4);
  RectMatrix wide{{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}};
  CHECK(rank(wide) == 1);
}

TEST_CASE("psd and pd decisions on the small examples") {
  CHECK(is_psd(kM1Singular));
  CHECK(!is_pd(kM1Singular));
  CHECK(is_psd(kM1Definite));
  CHECK(is_pd(kM1Definite));

  SymMatrix indefinite{{Rational(1), Rational(2)}, {Rational(2), Rational(1)}};
  CHECK(!is_psd(indefinite));
  CHECK(!is_pd(indefinite));

  // Zero pivot with a nonzero off-diagonal entry is never PSD.
  SymMatrix hollow{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  CHECK(!is_psd(hollow));
  SymMatrix semizero{{Rational(0), Rational(0)}, {Rational(0), Rational(1)}};
  CHECK(is_psd(semizero));
  SymMatrix negdiag{{Rational(0), Rational(0)}, {Rational(0), Rational(-1)}};
  CHECK(!is_psd(negdiag));
}

TEST_CASE("psd violation witness certifies non-psd exactly") {
  SymMatrix indefinite{{Rational(1), Rational(2)}, {Rational(2), Rational(1)}};
  auto w = psd_violation_witness(indefinite);
  REQUIRE(w.has_value());
  CHECK(quad_form(indefinite, *w) < Rational(0));
  CHECK(!psd_violation_witness(kM1Singular).has_value());
  CHECK(!psd_violation_witness(kM1Definite).has_value());
}

TEST_CASE("property: witness is sound and complete against a float eigensolver") {
  Rng rng(2001);
  int psd_seen = 0, non_psd_seen = 0;
  for (int n = 0; n < 120; ++n) {
    SymMatrix s = (n % 2 == 0) ? random_gram(rng, 4, rng.uniform_int(1, 5)) : [&] {
      RectMatrix r = random_rect(rng, 4, 4);
      return *SymMatrix::from_rect(r + r.transpose());
    }();
    auto w = psd_violation_witness(s);
    CHECK(is_psd(s) == !w.has_value());
    if (w) {
      ++non_psd_seen;
      CHECK(quad_form(s, *w) < Rational(0));
    } else {
      ++psd_seen;
      auto eig = momsolve::test::jacobi_eigenvalues(momsolve::test::to_float(s));
      double scale = std::max(1.0, momsolve::test::max_abs(momsolve::test::to_float(s)));
      CHECK(eig.front() >= -1e-9 * scale);
    }
  }
  // The mix must exercise both answers.
  CHECK(psd_seen > 20);
  CHECK(non_psd_seen > 20);
}

TEST_CASE("property: rank of a gram matrix equals rank of its factor") {
  Rng rng(2002);
  for (int n = 0; n < 60; ++n) {
    RectMatrix g = random_rect(rng, rng.uniform_int(1, 5), rng.uniform_int(1, 5));
    CHECK(rank(*SymMatrix::from_rect(g.transpose() * g)) == rank(g));
  }
}

TEST_CASE("solve_general: solutions, inconsistency, determinism") {
  RectMatrix a{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  RectMatrix b_ok(2, 1), b_bad(2, 1);
  b_ok.at(0, 0) = Rational(3);
  b_ok.at(1, 0) = Rational(6);
  b_bad.at(0, 0) = Rational(3);
  b_bad.at(1, 0) = Rational(7);

  auto x = solve_general(a, b_ok);
  REQUIRE(x.has_value());
  CHECK(a * *x == b_ok);
  // Free variables are pinned to zero, so the solution is canonical.
  CHECK(x->at(1, 0) == Rational(0));
  CHECK(x->at(0, 0) == Rational(3));
  CHECK(!solve_general(a, b_bad).has_value());

  RectMatrix id = RectMatrix::identity(3);
  Rng rng(7);
  RectMatrix rhs = random_rect(rng, 3, 2);
  auto y = solve_general(id, rhs);
  REQUIRE(y.has_value());
  CHECK(*y == rhs);
}

TEST_CASE("kernel basis spans the kernel") {
  RectMatrix a{{Rational(1), Rational(2), Rational(3)},
               {Rational(2), Rational(4), Rational(6)},
               {Rational(1), Rational(0), Rational(1)}};
  auto kb = kernel_basis(a);
  CHECK(static_cast<int>(kb.size()) == 3 - rank(a));
  for (const auto& v : kb) {
    for (int i = 0; i < a.rows(); ++i) {
      Rational s;
      for (int j = 0; j < a.cols(); ++j) s += a.at(i, j) * v[j];
      CHECK(s == Rational(0));
    }
  }
  CHECK(kernel_basis(RectMatrix::identity(3)).empty());
}

TEST_CASE("property: kernel dimension plus rank equals columns") {
  Rng rng(2003);
  for (int n = 0; n < 60; ++n) {
    RectMatrix a = random_rect(rng, rng.uniform_int(1, 5), rng.uniform_int(1, 5));
    auto kb = kernel_basis(a);
    CHECK(static_cast<int>(kb.size()) == a.cols() - rank(a));
    for (const auto& v : kb) {
      Rational norm1;
      for (int i = 0; i < a.rows(); ++i) {
        Rational s;
        for (int j = 0; j < a.cols(); ++j) s += a.at(i, j) * v[j];
        CHECK(s == Rational(0));
      }
      for (const auto& c : v) norm1 += c.abs();
      CHECK(norm1 > Rational(0));
    }
  }
}

TEST_CASE("solve_sym reproduces the reference W on the singular example") {
  // M(1) W = B(2) for the two-atom example; the free-variable-zero rule
  // makes the solution unique and equal to the reference matrix.
  RectMatrix b2{{Rational(5), Rational(-2), Rational(2)},
                {Rational(1), Rational(2), Rational(-2)},
                {Rational(2), Rational(-2), Rational(2)}};
  auto w = solve_sym(kM1Singular, b2);
  REQUIRE(w.has_value());
  RectMatrix expected{{Rational(1), Rational(-1, 2), Rational(1, 2)},
                      {Rational(0), Rational(1, 2), Rational(-1, 2)},
                      {Rational(0), Rational(0), Rational(0)}};
  CHECK(*w == expected);
  CHECK(kM1Singular.to_rect() * *w == b2);
}

TEST_CASE("solve_sym is exact inversion on the definite example") {
  RectMatrix b2{{Rational(2), Rational(-1), Rational(2)},
                {Rational(2), Rational(-1), Rational(1)},
                {Rational(-1), Rational(1), Rational(0)}};
  auto w = solve_sym(kM1Definite, b2);
  REQUIRE(w.has_value());
  RectMatrix expected{{Rational(0), Rational(-1), Rational(2)},
                      {Rational(1), Rational(1), Rational(-2)},
                      {Rational(0), Rational(1), Rational(-1)}};
  CHECK(*w == expected);
}

TEST_CASE("solve_sym reports range inclusion failure") {
  SymMatrix a{{Rational(1), Rational(0)}, {Rational(0), Rational(0)}};
  RectMatrix b(2, 1);
  b.at(1, 0) = Rational(1);
  CHECK(!solve_sym(a, b).has_value());
}

TEST_CASE("property: W^T M W is invariant under the kernel ambiguity in W") {
  // Any two solutions of M W = B differ by kernel columns; the product
  // W^T M W must not see the difference.
  Rng rng(2004);
  int exercised = 0;
  for (int n = 0; n < 80; ++n) {
    SymMatrix m = random_gram(rng, 3, rng.uniform_int(1, 2));  // singular by construction
    auto kb = kernel_basis(m.to_rect());
    if (kb.empty()) continue;
    RectMatrix w0 = random_rect(rng, 3, 3);
    RectMatrix b = m.to_rect() * w0;
    auto w = solve_sym(m, b);
    REQUIRE(w.has_value());
    RectMatrix w1 = *w;
    for (const auto& v : kb) {
      int target = rng.uniform_int(0, 2);
      Rational scale = rng.rational(4, 3);
      for (int i = 0; i < 3; ++i) w1.at(i, target) += scale * v[i];
    }
    CHECK(m.to_rect() * w1 == b);
    CHECK(w->transpose() * (m.to_rect() * *w) == w1.transpose() * (m.to_rect() * w1));
    ++exercised;
  }
  CHECK(exercised > 40);
}

TEST_CASE("jacobi oracle sanity") {
  std::vector<std::vector<double>> a{{2, 1, 0}, {1, 2, 0}, {0, 0, 5}};
  auto eig = momsolve::test::jacobi_eigenvalues(a);
  CHECK(eig[0] == doctest::Approx(1).epsilon(1e-12));
  CHECK(eig[1] == doctest::Approx(3).epsilon(1e-12));
  CHECK(eig[2] == doctest::Approx(5).epsilon(1e-12));
}

}  // TEST_SUITE
