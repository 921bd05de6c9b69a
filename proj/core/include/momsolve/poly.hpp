#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "momsolve/rational.hpp"

namespace momsolve {

/// Monomial x^i y^j. Ordered by total degree, then x-major within a degree,
/// matching the column order 1, X, Y, X^2, XY, Y^2, X^3, X^2Y, XY^2, Y^3.
struct Mono {
  int i = 0;
  int j = 0;

  int degree() const { return i + j; }

  friend bool operator==(const Mono& a, const Mono& b) { return a.i == b.i && a.j == b.j; }
  friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }
  friend bool operator<(const Mono& a, const Mono& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.j < b.j;
  }

  friend std::ostream& operator<<(std::ostream& os, const Mono& m);
};

/// Bivariate polynomial with exact rational coefficients, sparse over Mono.
/// Zero coefficients are never stored, so term iteration and equality are
/// canonical.
class Poly2 {
public:
  Poly2() = default;
  explicit Poly2(const Rational& constant);

  static Poly2 monomial(Mono m, const Rational& coeff = Rational(1));

  const std::map<Mono, Rational>& terms() const { return c_; }
  Rational coeff(Mono m) const;
  void set_coeff(Mono m, const Rational& v);
  void add_term(Mono m, const Rational& v);

  bool is_zero() const { return c_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  int degree_in_x() const;
  int degree_in_y() const;

  Poly2 mul_mono(Mono m) const;

  double eval(double x, double y) const;
  Rational eval_exact(const Rational& x, const Rational& y) const;

  /// Sum of absolute coefficient values, as a double. Used to scale residual
  /// tolerances.
  double one_norm() const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Rational& s);

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(Poly2 a, const Rational& s) { return a *= s; }
  friend Poly2 operator*(const Rational& s, Poly2 a) { return a *= s; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Poly2& p);

private:
  std::map<Mono, Rational> c_;
};

}  // namespace momsolve
