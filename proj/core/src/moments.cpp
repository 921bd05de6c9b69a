#include "momsolve/moments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace momsolve {

namespace {

constexpr double kAtomMergeTol = 1e-8;

const MonomialIndex& cubic_index() {
  static const MonomialIndex idx(3);
  return idx;
}

}  // namespace

MonomialIndex::MonomialIndex(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("MonomialIndex: negative degree");
  for (int d = 0; d <= degree; ++d)
    for (int i = d; i >= 0; --i) list_.push_back(Mono{i, d - i});
}

int MonomialIndex::index_of(Mono m) const {
  for (int k = 0; k < size(); ++k)
    if (list_[static_cast<std::size_t>(k)] == m) return k;
  throw std::out_of_range("MonomialIndex: monomial outside range");
}

MomentSequence3::MomentSequence3(std::array<Rational, 10> values) : v_(std::move(values)) {
  if (v_[0].sign() <= 0) throw std::invalid_argument("MomentSequence3: beta_00 must be positive");
}

MomentSequence3 MomentSequence3::from_map(const std::map<Mono, Rational>& moments) {
  if (moments.size() != 10)
    throw std::invalid_argument("MomentSequence3: expected exactly the ten moments i+j <= 3");
  std::array<Rational, 10> v;
  for (int k = 0; k < 10; ++k) {
    Mono m = cubic_index().at(k);
    auto it = moments.find(m);
    if (it == moments.end()) {
      std::ostringstream os;
      os << "MomentSequence3: missing moment beta_" << m.i << m.j;
      throw std::invalid_argument(os.str());
    }
    v[static_cast<std::size_t>(k)] = it->second;
  }
  return MomentSequence3(std::move(v));
}

const Rational& MomentSequence3::beta(int i, int j) const {
  if (i < 0 || j < 0 || i + j > 3) throw std::out_of_range("MomentSequence3: degree > 3");
  return v_[static_cast<std::size_t>(cubic_index().index_of(Mono{i, j}))];
}

MomentMatrix::MomentMatrix(int degree, const std::map<Mono, Rational>& moments)
    : index_(degree), mat_(MonomialIndex(degree).size()) {
  for (int i = 0; i <= 2 * degree; ++i)
    for (int j = 0; i + j <= 2 * degree; ++j) {
      auto it = moments.find(Mono{i, j});
      if (it == moments.end()) {
        std::ostringstream os;
        os << "MomentMatrix: missing moment beta_" << i << j << " for degree " << degree;
        throw std::invalid_argument(os.str());
      }
      moments_[Mono{i, j}] = it->second;
    }
  for (int r = 0; r < index_.size(); ++r)
    for (int c = r; c < index_.size(); ++c) {
      Mono p = index_.at(r), q = index_.at(c);
      mat_.set(r, c, moments_.at(Mono{p.i + q.i, p.j + q.j}));
    }
}

const Rational& MomentMatrix::moment(int i, int j) const {
  auto it = moments_.find(Mono{i, j});
  if (it == moments_.end()) throw std::out_of_range("MomentMatrix: moment outside degree range");
  return it->second;
}

AtomicMeasure::AtomicMeasure(std::vector<std::array<double, 2>> atoms_in,
                             std::vector<double> weights_in) {
  if (atoms_in.size() != weights_in.size())
    throw std::invalid_argument("AtomicMeasure: atom and weight counts differ");
  if (atoms_in.empty()) throw std::invalid_argument("AtomicMeasure: empty measure");
  for (std::size_t k = 0; k < atoms_in.size(); ++k) {
    if (!std::isfinite(atoms_in[k][0]) || !std::isfinite(atoms_in[k][1]) ||
        !std::isfinite(weights_in[k]))
      throw std::invalid_argument("AtomicMeasure: non-finite entry");
    if (weights_in[k] <= 0) throw std::invalid_argument("AtomicMeasure: nonpositive weight");
    bool merged = false;
    for (std::size_t r = 0; r < atoms.size(); ++r) {
      if (std::max(std::fabs(atoms[r][0] - atoms_in[k][0]),
                   std::fabs(atoms[r][1] - atoms_in[k][1])) < kAtomMergeTol) {
        weights[r] += weights_in[k];
        merged = true;
        break;
      }
    }
    if (!merged) {
      atoms.push_back(atoms_in[k]);
      weights.push_back(weights_in[k]);
    }
  }
  std::vector<std::size_t> order(atoms.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return atoms[a] < atoms[b]; });
  std::vector<std::array<double, 2>> sorted_atoms;
  std::vector<double> sorted_weights;
  for (std::size_t k : order) {
    sorted_atoms.push_back(atoms[k]);
    sorted_weights.push_back(weights[k]);
  }
  atoms = std::move(sorted_atoms);
  weights = std::move(sorted_weights);
}

ExactMeasure::ExactMeasure(std::vector<std::array<Rational, 2>> atoms_in,
                           std::vector<Rational> weights_in) {
  if (atoms_in.size() != weights_in.size())
    throw std::invalid_argument("ExactMeasure: atom and weight counts differ");
  if (atoms_in.empty()) throw std::invalid_argument("ExactMeasure: empty measure");
  const Rational tol(kAtomMergeTol);
  for (std::size_t k = 0; k < atoms_in.size(); ++k) {
    if (weights_in[k].sign() <= 0)
      throw std::invalid_argument("ExactMeasure: nonpositive weight");
    bool merged = false;
    for (std::size_t r = 0; r < atoms.size(); ++r) {
      Rational dx = (atoms[r][0] - atoms_in[k][0]).abs();
      Rational dy = (atoms[r][1] - atoms_in[k][1]).abs();
      if ((dx > dy ? dx : dy) < tol) {
        weights[r] += weights_in[k];
        merged = true;
        break;
      }
    }
    if (!merged) {
      atoms.push_back(atoms_in[k]);
      weights.push_back(weights_in[k]);
    }
  }
  std::vector<std::size_t> order(atoms.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (atoms[a][0] != atoms[b][0]) return atoms[a][0] < atoms[b][0];
    return atoms[a][1] < atoms[b][1];
  });
  std::vector<std::array<Rational, 2>> sorted_atoms;
  std::vector<Rational> sorted_weights;
  for (std::size_t k : order) {
    sorted_atoms.push_back(atoms[k]);
    sorted_weights.push_back(weights[k]);
  }
  atoms = std::move(sorted_atoms);
  weights = std::move(sorted_weights);
}

AtomicMeasure ExactMeasure::to_double() const {
  std::vector<std::array<double, 2>> a;
  std::vector<double> w;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    a.push_back({atoms[k][0].to_double(), atoms[k][1].to_double()});
    w.push_back(weights[k].to_double());
  }
  return AtomicMeasure(std::move(a), std::move(w));
}

MomentMatrix build_M1(const MomentSequence3& s) {
  std::map<Mono, Rational> m;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 2; ++j) m[Mono{i, j}] = s.beta(i, j);
  return MomentMatrix(1, m);
}

RectMatrix build_B2(const MomentSequence3& s) {
  const MonomialIndex idx1(1);
  const Mono cols[3] = {Mono{2, 0}, Mono{1, 1}, Mono{0, 2}};
  RectMatrix b(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      Mono p = idx1.at(r), q = cols[c];
      b.at(r, c) = s.beta(p.i + q.i, p.j + q.j);
    }
  return b;
}

MomentMatrix assemble_M2(const MomentSequence3& s, const SymMatrix& C2) {
  if (C2.dim() != 3) throw std::invalid_argument("assemble_M2: C2 must be 3x3");
  if (C2.at(0, 2) != C2.at(1, 1))
    throw std::invalid_argument(
        "assemble_M2: C2 is not Hankel, entries (X^2,Y^2) and (XY,XY) disagree");
  std::map<Mono, Rational> m;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) m[Mono{i, j}] = s.beta(i, j);
  m[Mono{4, 0}] = C2.at(0, 0);
  m[Mono{3, 1}] = C2.at(0, 1);
  m[Mono{2, 2}] = C2.at(1, 1);
  m[Mono{1, 3}] = C2.at(1, 2);
  m[Mono{0, 4}] = C2.at(2, 2);
  return MomentMatrix(2, m);
}

Rational riesz(const Poly2& p, const MomentSequence3& s) {
  if (p.degree() > 3) throw std::invalid_argument("riesz: polynomial degree exceeds 3");
  Rational v(0);
  for (const auto& [m, c] : p.terms()) v += c * s.beta(m);
  return v;
}

std::map<Mono, Rational> moments_from_measure(const ExactMeasure& m, int max_degree) {
  std::map<Mono, Rational> out;
  for (int d = 0; d <= max_degree; ++d)
    for (int i = d; i >= 0; --i) {
      Rational v(0);
      for (std::size_t k = 0; k < m.size(); ++k)
        v += m.weights[k] * m.atoms[k][0].pow(static_cast<unsigned>(i)) *
             m.atoms[k][1].pow(static_cast<unsigned>(d - i));
      out[Mono{i, d - i}] = v;
    }
  return out;
}

std::map<Mono, double> moments_from_measure(const AtomicMeasure& m, int max_degree) {
  std::map<Mono, double> out;
  for (int d = 0; d <= max_degree; ++d)
    for (int i = d; i >= 0; --i) {
      double v = 0;
      for (std::size_t k = 0; k < m.size(); ++k)
        v += m.weights[k] * std::pow(m.atoms[k][0], i) * std::pow(m.atoms[k][1], d - i);
      out[Mono{i, d - i}] = v;
    }
  return out;
}

}  // namespace momsolve
