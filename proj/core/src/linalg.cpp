#include "momsolve/linalg.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace momsolve {

namespace {

void check_index(int i, int n, const char* what) {
  if (i < 0 || i >= n) throw std::out_of_range(what);
}

}  // namespace

RectMatrix::RectMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RectMatrix: negative dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

RectMatrix::RectMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : RectMatrix(static_cast<int>(rows.size()),
                 rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  int i = 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw std::invalid_argument("RectMatrix: ragged initializer");
    int j = 0;
    for (const auto& v : r) at(i, j++) = v;
    ++i;
  }
}

RectMatrix RectMatrix::identity(int n) {
  RectMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

const Rational& RectMatrix::at(int i, int j) const {
  check_index(i, rows_, "RectMatrix row");
  check_index(j, cols_, "RectMatrix col");
  return a_[static_cast<std::size_t>(i) * cols_ + j];
}

Rational& RectMatrix::at(int i, int j) {
  check_index(i, rows_, "RectMatrix row");
  check_index(j, cols_, "RectMatrix col");
  return a_[static_cast<std::size_t>(i) * cols_ + j];
}

RectMatrix RectMatrix::transpose() const {
  RectMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Rational> RectMatrix::col(int j) const {
  std::vector<Rational> v;
  v.reserve(rows_);
  for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

std::vector<Rational> RectMatrix::row(int i) const {
  std::vector<Rational> v;
  v.reserve(cols_);
  for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

RectMatrix operator*(const RectMatrix& a, const RectMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RectMatrix: size mismatch in product");
  RectMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

RectMatrix operator+(const RectMatrix& a, const RectMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("RectMatrix: size mismatch in sum");
  RectMatrix c(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

RectMatrix operator-(const RectMatrix& a, const RectMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("RectMatrix: size mismatch in difference");
  RectMatrix c(a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

bool operator==(const RectMatrix& a, const RectMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::ostream& operator<<(std::ostream& os, const RectMatrix& m) {
  os << "[";
  for (int i = 0; i < m.rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m.at(i, j);
    os << "]";
  }
  return os << "]";
}

SymMatrix::SymMatrix(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("SymMatrix: negative dimension");
  a_.assign(static_cast<std::size_t>(dim) * dim, Rational(0));
}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : SymMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != dim_)
      throw std::invalid_argument("SymMatrix: initializer is not square");
    int j = 0;
    for (const auto& v : r) a_[static_cast<std::size_t>(i) * dim_ + j++] = v;
    ++i;
  }
  for (i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (at(i, j) != at(j, i)) throw std::invalid_argument("SymMatrix: initializer not symmetric");
}

std::optional<SymMatrix> SymMatrix::from_rect(const RectMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  SymMatrix s(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j) {
      if (m.at(i, j) != m.at(j, i)) return std::nullopt;
      s.set(i, j, m.at(i, j));
    }
  return s;
}

const Rational& SymMatrix::at(int i, int j) const {
  check_index(i, dim_, "SymMatrix row");
  check_index(j, dim_, "SymMatrix col");
  return a_[static_cast<std::size_t>(i) * dim_ + j];
}

void SymMatrix::set(int i, int j, const Rational& v) {
  check_index(i, dim_, "SymMatrix row");
  check_index(j, dim_, "SymMatrix col");
  a_[static_cast<std::size_t>(i) * dim_ + j] = v;
  a_[static_cast<std::size_t>(j) * dim_ + i] = v;
}

RectMatrix SymMatrix::to_rect() const {
  RectMatrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m.at(i, j) = at(i, j);
  return m;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("SymMatrix: size mismatch in difference");
  SymMatrix c(a.dim_);
  for (int i = 0; i < a.dim_; ++i)
    for (int j = i; j < a.dim_; ++j) c.set(i, j, a.at(i, j) - b.at(i, j));
  return c;
}

bool operator==(const SymMatrix& a, const SymMatrix& b) {
  return a.dim_ == b.dim_ && a.a_ == b.a_;
}

std::ostream& operator<<(std::ostream& os, const SymMatrix& m) { return os << m.to_rect(); }

int rank(const RectMatrix& m) {
  RectMatrix w = m;
  int r = 0;
  for (int c = 0; c < w.cols() && r < w.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < w.rows(); ++i)
      if (!w.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < w.cols(); ++j) std::swap(w.at(piv, j), w.at(r, j));
    for (int i = r + 1; i < w.rows(); ++i) {
      if (w.at(i, c).is_zero()) continue;
      Rational f = w.at(i, c) / w.at(r, c);
      for (int j = c; j < w.cols(); ++j) w.at(i, j) -= f * w.at(r, j);
    }
    ++r;
  }
  return r;
}

int rank(const SymMatrix& m) { return rank(m.to_rect()); }

std::optional<std::vector<Rational>> psd_violation_witness(const SymMatrix& m) {
  // Symmetric elimination tracking the congruence transform T, so that
  // work = T m T^T at every step. A negative pivot d at position k yields the
  // witness v = T^T e_k with v^T m v = d; a zero pivot with a nonzero
  // off-diagonal entry yields a 2x2 indefinite block handled below.
  const int n = m.dim();
  RectMatrix work = m.to_rect();
  RectMatrix T = RectMatrix::identity(n);
  auto pulled_back = [&](const std::vector<Rational>& u) {
    // v = T^T u, i.e. v_j = sum_i u_i T[i][j].
    std::vector<Rational> v(n, Rational(0));
    for (int i = 0; i < n; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) v[j] += u[i] * T.at(i, j);
    }
    return v;
  };
  for (int k = 0; k < n; ++k) {
    const Rational d = work.at(k, k);
    if (d.sign() < 0) {
      std::vector<Rational> u(n, Rational(0));
      u[k] = Rational(1);
      return pulled_back(u);
    }
    if (d.is_zero()) {
      int off = -1;
      for (int i = k + 1; i < n; ++i)
        if (!work.at(i, k).is_zero()) {
          off = i;
          break;
        }
      if (off < 0) continue;  // zero row and column: PSD-compatible, skip
      const Rational s = work.at(off, k);
      const Rational t = work.at(off, off);
      std::vector<Rational> u(n, Rational(0));
      if (t.sign() < 0) {
        u[off] = Rational(1);
      } else {
        // Quadratic form along e_k + lambda e_off is 2*lambda*s + lambda^2*t.
        u[k] = Rational(1);
        u[off] = t.sign() > 0 ? -s / t : Rational(-s.sign());
      }
      return pulled_back(u);
    }
    // Positive pivot: form the Schur complement and zero row/column k.
    for (int i = k + 1; i < n; ++i) {
      if (work.at(i, k).is_zero()) continue;
      Rational f = work.at(i, k) / d;
      for (int j = k + 1; j < n; ++j) work.at(i, j) -= f * work.at(k, j);
      for (int j = 0; j < n; ++j) T.at(i, j) -= f * T.at(k, j);
      work.at(i, k) = Rational(0);
    }
    for (int j = k + 1; j < n; ++j) work.at(k, j) = Rational(0);
  }
  return std::nullopt;
}

bool is_psd(const SymMatrix& m) { return !psd_violation_witness(m).has_value(); }

bool is_pd(const SymMatrix& m) {
  // In-order elimination; pivot k equals det(A_k)/det(A_{k-1}), so requiring
  // every pivot positive is Sylvester's criterion.
  const int n = m.dim();
  RectMatrix work = m.to_rect();
  for (int k = 0; k < n; ++k) {
    const Rational d = work.at(k, k);
    if (d.sign() <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      if (work.at(i, k).is_zero()) continue;
      Rational f = work.at(i, k) / d;
      for (int j = k + 1; j < n; ++j) work.at(i, j) -= f * work.at(k, j);
    }
  }
  return true;
}

namespace {

struct Echelon {
  RectMatrix A;
  RectMatrix B;
  std::vector<std::pair<int, int>> pivots;  // (row, col), increasing in both
};

Echelon eliminate(const RectMatrix& A0, const RectMatrix& B0) {
  Echelon e{A0, B0, {}};
  int r = 0;
  for (int c = 0; c < e.A.cols() && r < e.A.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < e.A.rows(); ++i)
      if (!e.A.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < e.A.cols(); ++j) std::swap(e.A.at(piv, j), e.A.at(r, j));
      for (int j = 0; j < e.B.cols(); ++j) std::swap(e.B.at(piv, j), e.B.at(r, j));
    }
    for (int i = r + 1; i < e.A.rows(); ++i) {
      if (e.A.at(i, c).is_zero()) continue;
      Rational f = e.A.at(i, c) / e.A.at(r, c);
      for (int j = c; j < e.A.cols(); ++j) e.A.at(i, j) -= f * e.A.at(r, j);
      for (int j = 0; j < e.B.cols(); ++j) e.B.at(i, j) -= f * e.B.at(r, j);
    }
    e.pivots.emplace_back(r, c);
    ++r;
  }
  return e;
}

}  // namespace

std::optional<RectMatrix> solve_general(const RectMatrix& A, const RectMatrix& B) {
  if (A.rows() != B.rows()) throw std::invalid_argument("solve_general: row count mismatch");
  Echelon e = eliminate(A, B);
  const int nrank = static_cast<int>(e.pivots.size());
  for (int i = nrank; i < e.A.rows(); ++i)
    for (int j = 0; j < e.B.cols(); ++j)
      if (!e.B.at(i, j).is_zero()) return std::nullopt;
  RectMatrix X(A.cols(), B.cols());  // free variables stay zero
  for (int p = nrank - 1; p >= 0; --p) {
    auto [pr, pc] = e.pivots[p];
    for (int t = 0; t < e.B.cols(); ++t) {
      Rational s = e.B.at(pr, t);
      for (int c = pc + 1; c < e.A.cols(); ++c) {
        if (e.A.at(pr, c).is_zero()) continue;
        s -= e.A.at(pr, c) * X.at(c, t);
      }
      X.at(pc, t) = s / e.A.at(pr, pc);
    }
  }
  return X;
}

std::optional<RectMatrix> solve_sym(const SymMatrix& A, const RectMatrix& B) {
  return solve_general(A.to_rect(), B);
}

std::vector<std::vector<Rational>> kernel_basis(const RectMatrix& A) {
  Echelon e = eliminate(A, RectMatrix(A.rows(), 0));
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto [pr, pc] : e.pivots) is_pivot[pc] = true;
  std::vector<std::vector<Rational>> basis;
  for (int fc = 0; fc < A.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> v(A.cols(), Rational(0));
    v[fc] = Rational(1);
    for (int p = static_cast<int>(e.pivots.size()) - 1; p >= 0; --p) {
      auto [pr, pc] = e.pivots[p];
      Rational s(0);
      for (int c = pc + 1; c < A.cols(); ++c) {
        if (e.A.at(pr, c).is_zero()) continue;
        s += e.A.at(pr, c) * v[c];
      }
      v[pc] = -s / e.A.at(pr, pc);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace momsolve
