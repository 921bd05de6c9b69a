#pragma once

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

#include "momsolve/rational.hpp"

namespace momsolve {

/// Dense matrix over exact rationals. Row-major, zero-initialized.
class RectMatrix {
public:
  RectMatrix(int rows, int cols);
  RectMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RectMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rational& at(int i, int j) const;
  Rational& at(int i, int j);

  RectMatrix transpose() const;
  std::vector<Rational> col(int j) const;
  std::vector<Rational> row(int i) const;

  friend RectMatrix operator*(const RectMatrix& a, const RectMatrix& b);
  friend RectMatrix operator+(const RectMatrix& a, const RectMatrix& b);
  friend RectMatrix operator-(const RectMatrix& a, const RectMatrix& b);
  friend bool operator==(const RectMatrix& a, const RectMatrix& b);
  friend bool operator!=(const RectMatrix& a, const RectMatrix& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const RectMatrix& m);

private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// Symmetric matrix over exact rationals. Writes through set() mirror the
/// transposed entry, so symmetry holds by construction.
class SymMatrix {
public:
  explicit SymMatrix(int dim);
  SymMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  /// Fails (nullopt) when m is not square or not exactly symmetric.
  static std::optional<SymMatrix> from_rect(const RectMatrix& m);

  int dim() const { return dim_; }

  const Rational& at(int i, int j) const;
  void set(int i, int j, const Rational& v);

  RectMatrix to_rect() const;

  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
  friend bool operator==(const SymMatrix& a, const SymMatrix& b);
  friend bool operator!=(const SymMatrix& a, const SymMatrix& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const SymMatrix& m);

private:
  int dim_;
  std::vector<Rational> a_;
};

/// Exact rank by Gaussian elimination over the rationals.
int rank(const RectMatrix& m);
int rank(const SymMatrix& m);

/// Exact positive semidefiniteness by symmetric elimination: a zero pivot is
/// accepted only when its entire remaining row and column are zero.
bool is_psd(const SymMatrix& m);

/// Exact positive definiteness: all leading principal minors positive,
/// realized as in-order elimination with every pivot strictly positive.
bool is_pd(const SymMatrix& m);

/// For a matrix that is not PSD, a rational vector v with v^T m v < 0.
/// Returns nullopt exactly when m is PSD.
std::optional<std::vector<Rational>> psd_violation_witness(const SymMatrix& m);

/// Solves A X = B exactly for rectangular A, returning nullopt when the
/// system is inconsistent. Free variables are fixed to zero, which makes the
/// returned solution deterministic.
std::optional<RectMatrix> solve_general(const RectMatrix& A, const RectMatrix& B);

/// Solves A W = B for symmetric A. Absence (nullopt) means the column range
/// inclusion Ran B in Ran A fails. Any two solutions differ by kernel columns
/// of A, so W^T A W is well defined regardless of which solution is returned.
std::optional<RectMatrix> solve_sym(const SymMatrix& A, const RectMatrix& B);

/// Basis of the kernel of A, one vector per free column, in column order.
std::vector<std::vector<Rational>> kernel_basis(const RectMatrix& A);

}  // namespace momsolve
