#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "momsolve/linalg.hpp"
#include "momsolve/poly.hpp"
#include "momsolve/rational.hpp"

namespace momsolve {

/// Monomials of total degree <= degree in the canonical column order.
class MonomialIndex {
public:
  explicit MonomialIndex(int degree);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(list_.size()); }
  Mono at(int k) const { return list_.at(static_cast<std::size_t>(k)); }
  int index_of(Mono m) const;  // throws std::out_of_range when absent
  const std::vector<Mono>& list() const { return list_; }

private:
  int degree_;
  std::vector<Mono> list_;
};

/// The ten real moments beta_ij, i+j <= 3, with beta_00 > 0.
class MomentSequence3 {
public:
  /// Moments in the canonical order 00,10,01,20,11,02,30,21,12,03.
  explicit MomentSequence3(std::array<Rational, 10> values);

  /// Requires exactly the ten keys i+j <= 3. Throws std::invalid_argument on
  /// missing or extraneous keys or beta_00 <= 0.
  static MomentSequence3 from_map(const std::map<Mono, Rational>& moments);

  const Rational& beta(int i, int j) const;
  const Rational& beta(Mono m) const { return beta(m.i, m.j); }
  const std::array<Rational, 10>& values() const { return v_; }

  friend bool operator==(const MomentSequence3& a, const MomentSequence3& b) {
    return a.v_ == b.v_;
  }

private:
  std::array<Rational, 10> v_;
};

/// Moment matrix M(n): rows and columns indexed by monomials of degree <= n,
/// entry (p, q) = beta_{p+q}. Hankel structure holds by construction because
/// every entry is read from a single moment map.
class MomentMatrix {
public:
  /// Requires a moment for every i+j <= 2*degree.
  MomentMatrix(int degree, const std::map<Mono, Rational>& moments);

  int degree() const { return index_.degree(); }
  const MonomialIndex& index() const { return index_; }
  const SymMatrix& mat() const { return mat_; }
  const Rational& moment(int i, int j) const;
  const Rational& entry(Mono row, Mono col) const { return moment(row.i + col.i, row.j + col.j); }
  const std::map<Mono, Rational>& moments() const { return moments_; }

  friend bool operator==(const MomentMatrix& a, const MomentMatrix& b) {
    return a.index_.degree() == b.index_.degree() && a.mat_ == b.mat_;
  }

private:
  MonomialIndex index_;
  std::map<Mono, Rational> moments_;
  SymMatrix mat_;
};

/// Finitely atomic measure with positive weights and double coordinates.
/// Atoms closer than 1e-8 in max-norm are merged at construction, weights
/// summed; atoms are kept sorted by (x, y). Throws std::invalid_argument on a
/// nonpositive weight or a length mismatch.
struct AtomicMeasure {
  std::vector<std::array<double, 2>> atoms;
  std::vector<double> weights;

  AtomicMeasure(std::vector<std::array<double, 2>> atoms_in, std::vector<double> weights_in);

  std::size_t size() const { return atoms.size(); }
};

/// Atomic measure with exact rational data; same construction rules as
/// AtomicMeasure with the merge threshold compared exactly.
struct ExactMeasure {
  std::vector<std::array<Rational, 2>> atoms;
  std::vector<Rational> weights;

  ExactMeasure(std::vector<std::array<Rational, 2>> atoms_in, std::vector<Rational> weights_in);

  std::size_t size() const { return atoms.size(); }
  AtomicMeasure to_double() const;
};

/// M(1), the 3x3 moment matrix of s.
MomentMatrix build_M1(const MomentSequence3& s);

/// B(2), the 3x3 block pairing rows {1, X, Y} with columns {X^2, XY, Y^2}.
/// Not symmetric in general.
RectMatrix build_B2(const MomentSequence3& s);

/// M(2) from the cubic data and a candidate quartic block C2. C2 must be the
/// Hankel completion, i.e. C2[0][2] = C2[1][1]; otherwise the entries would
/// not define consistent quartic moments and std::invalid_argument is thrown.
MomentMatrix assemble_M2(const MomentSequence3& s, const SymMatrix& C2);

/// Riesz functional: L(sum a_ij x^i y^j) = sum a_ij beta_ij.
/// Throws std::invalid_argument when deg p > 3.
Rational riesz(const Poly2& p, const MomentSequence3& s);

/// Moments beta_ij = sum_k rho_k x_k^i y_k^j for all i+j <= max_degree.
/// The exact overload keeps rational arithmetic throughout.
std::map<Mono, Rational> moments_from_measure(const ExactMeasure& m, int max_degree);
std::map<Mono, double> moments_from_measure(const AtomicMeasure& m, int max_degree);

}  // namespace momsolve
