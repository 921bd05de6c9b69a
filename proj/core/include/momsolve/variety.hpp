#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "momsolve/extension.hpp"
#include "momsolve/poly.hpp"
#include "momsolve/rational.hpp"

namespace momsolve {

/// Univariate polynomial with exact rational coefficients, low order first.
/// Canonical: no stored leading zeros; the zero polynomial has no terms.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;

  Rational eval_exact(const Rational& x) const;
  double eval(double x) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  /// p / gcd(p, p'): same roots, all simple.
  UniPoly squarefree_part() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static UniPoly gcd(UniPoly a, UniPoly b);

private:
  std::vector<Rational> c_;  // invariant: empty or nonzero back()
  void normalize();
};

/// Raised by the resultant when the two polynomials share a nonconstant
/// common factor, making the resultant identically zero.
class IdenticallyZeroResultant : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Resultant of p and q with respect to y: the Sylvester determinant over
/// exact rational polynomials in x. When one argument has y-degree zero the
/// usual convention applies (that argument raised to the other's y-degree).
/// Throws IdenticallyZeroResultant when the determinant is the zero
/// polynomial and std::invalid_argument when either input is zero.
UniPoly resultant_y(const Poly2& p, const Poly2& q);

/// Same with the roles of x and y exchanged; returns a polynomial in y.
UniPoly resultant_x(const Poly2& p, const Poly2& q);

/// All real roots of p, each simple root reported once, ascending. Roots are
/// isolated by Sturm bisection on the exact squarefree part down to interval
/// width min(tol, 1e-12) and then Newton-polished in doubles. The zero
/// polynomial is rejected (std::invalid_argument); constants have no roots.
std::vector<double> real_roots(const UniPoly& p, double tol);

struct VarietyPoint {
  double x;
  double y;
  /// max over the input relations of |P(x, y)|.
  double residual;
};

/// Common zero set, sorted by (x, y), points deduplicated at 1e-8 max-norm.
struct Variety {
  std::vector<VarietyPoint> points;
};

/// Intersects the zero sets of the relations. Degree-1 relations are
/// eliminated by direct substitution first; otherwise x is eliminated through
/// pairwise resultants in y (gcd of the nonzero ones), with y recovered by
/// back-substitution into a relation linear in y or from the roots of a
/// y-specialization, and every candidate filtered against all relations at
/// |P(x,y)| <= tol * (1 + |P|_1 * max(1, |x|, |y|)^3).
/// Throws InfiniteVariety when the relations cut out a curve, detected when
/// the pairwise resultants vanish identically in both variables.
Variety common_zeros(const std::vector<RelationPoly>& relations, double tol);

}  // namespace momsolve
