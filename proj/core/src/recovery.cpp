#include "momsolve/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "momsolve/errors.hpp"

namespace momsolve {

const char* reason_name(NoMeasure::Reason r) {
  switch (r) {
    case NoMeasure::Reason::M1NotPsd: return "M1NotPsd";
    case NoMeasure::Reason::RangeInclusionFails: return "RangeInclusionFails";
  }
  return "?";
}

namespace {

double mono_eval(const std::array<double, 2>& atom, Mono m) {
  return std::pow(atom[0], m.i) * std::pow(atom[1], m.j);
}

double max_rel_error(const MomentSequence3& s, const std::vector<std::array<double, 2>>& atoms,
                     const std::vector<double>& w) {
  const MonomialIndex idx(3);
  double worst = 0;
  for (int row = 0; row < idx.size(); ++row) {
    Mono m = idx.at(row);
    double expected = s.beta(m).to_double();
    double got = 0;
    for (std::size_t k = 0; k < atoms.size(); ++k) got += w[k] * mono_eval(atoms[k], m);
    worst = std::max(worst, std::fabs(got - expected) / (1.0 + std::fabs(expected)));
  }
  return worst;
}

// The basis system pins the densities from rank-many moment equations; the
// remaining moments are then reproduced only as well as the atom coordinates
// allow, and an atom with large coordinates amplifies that error through its
// cubic monomials. Re-fitting the densities against all ten moments, each
// equation scaled the way the verifier scales it, balances the error across
// the whole sequence. The refit replaces the densities only when it stays
// strictly positive and does not worsen the verification metric.
void refine_weights(const MomentSequence3& s, const std::vector<std::array<double, 2>>& atoms,
                    std::vector<double>& w) {
  const MonomialIndex idx(3);
  const std::size_t r = atoms.size();
  const std::size_t rows = static_cast<std::size_t>(idx.size());
  std::vector<std::vector<double>> A(rows, std::vector<double>(r));
  std::vector<double> rhs(rows);
  for (std::size_t row = 0; row < rows; ++row) {
    Mono m = idx.at(static_cast<int>(row));
    double b = s.beta(m).to_double();
    double sc = 1.0 / (1.0 + std::fabs(b));
    for (std::size_t k = 0; k < r; ++k) A[row][k] = sc * mono_eval(atoms[k], m);
    rhs[row] = sc * b;
  }
  // Normal equations; r is at most the flat rank, so the system is tiny.
  std::vector<std::vector<double>> N(r, std::vector<double>(r + 1, 0.0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t row = 0; row < rows; ++row) N[i][j] += A[row][i] * A[row][j];
    for (std::size_t row = 0; row < rows; ++row) N[i][r] += A[row][i] * rhs[row];
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < r; ++i)
      if (std::fabs(N[i][col]) > std::fabs(N[piv][col])) piv = i;
    if (!(std::fabs(N[piv][col]) > 0)) return;
    std::swap(N[piv], N[col]);
    for (std::size_t i = col + 1; i < r; ++i) {
      double f = N[i][col] / N[col][col];
      for (std::size_t j = col; j <= r; ++j) N[i][j] -= f * N[col][j];
    }
  }
  std::vector<double> refined(r);
  for (std::size_t i = r; i-- > 0;) {
    double acc = N[i][r];
    for (std::size_t j = i + 1; j < r; ++j) acc -= N[i][j] * refined[j];
    refined[i] = acc / N[i][i];
  }
  for (double v : refined)
    if (!(v > 0) || !std::isfinite(v)) return;
  if (max_rel_error(s, atoms, refined) < max_rel_error(s, atoms, w)) w = std::move(refined);
}

}  // namespace

std::vector<double> solve_weights(const std::vector<std::array<double, 2>>& atoms,
                                  const std::vector<Mono>& basis,
                                  const std::vector<double>& basis_moments) {
  const std::size_t r = atoms.size();
  if (basis.size() != r || basis_moments.size() != r)
    throw std::invalid_argument("solve_weights: atom, basis and moment counts must agree");
  if (r == 0) throw std::invalid_argument("solve_weights: empty system");

  // V[i][k] = basis_i(atom_k), augmented with the Riesz values.
  std::vector<std::vector<double>> V(r, std::vector<double>(r + 1));
  double scale = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      V[i][k] = std::pow(atoms[k][0], basis[i].i) * std::pow(atoms[k][1], basis[i].j);
      scale = std::max(scale, std::fabs(V[i][k]));
    }
    V[i][r] = basis_moments[i];
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < r; ++i)
      if (std::fabs(V[i][col]) > std::fabs(V[piv][col])) piv = i;
    if (std::fabs(V[piv][col]) <= 1e-12 * std::max(1.0, scale)) {
      std::ostringstream os;
      os << "weight system is singular at elimination step " << col
         << "; atoms do not separate the basis monomials";
      throw SingularVandermonde(os.str());
    }
    std::swap(V[piv], V[col]);
    for (std::size_t i = col + 1; i < r; ++i) {
      double f = V[i][col] / V[col][col];
      if (f == 0) continue;
      for (std::size_t j = col; j <= r; ++j) V[i][j] -= f * V[col][j];
    }
  }
  std::vector<double> rho(r);
  for (std::size_t i = r; i-- > 0;) {
    double s = V[i][r];
    for (std::size_t j = i + 1; j < r; ++j) s -= V[i][j] * rho[j];
    rho[i] = s / V[i][i];
  }
  for (std::size_t k = 0; k < r; ++k)
    if (!(rho[k] > 0)) {
      std::ostringstream os;
      os << "computed density rho_" << k << " = " << rho[k] << " is not positive";
      throw NonpositiveWeight(os.str());
    }
  return rho;
}

VerifyReport verify_measure(const MomentSequence3& s, const AtomicMeasure& m, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("verify_measure: tolerance must be positive");
  std::map<Mono, double> computed = moments_from_measure(m, 3);
  VerifyReport rep{true, tol, 0.0, {}};
  const MonomialIndex idx(3);
  for (int k = 0; k < idx.size(); ++k) {
    Mono mono = idx.at(k);
    double expected = s.beta(mono).to_double();
    double got = computed.at(mono);
    double abs_err = std::fabs(got - expected);
    double rel_err = abs_err / (1.0 + std::fabs(expected));
    rep.max_abs_error = std::max(rep.max_abs_error, abs_err);
    if (rel_err > tol) rep.pass = false;
    rep.moments.push_back(MomentCheck{mono, expected, got, abs_err, rel_err});
  }
  return rep;
}

SolveOutcome solve(const MomentSequence3& s, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("solve: tolerance must be positive");

  Classification cls = classify(s);
  if (cls.branch == Branch::NotPsd)
    return NoMeasure{NoMeasure::Reason::M1NotPsd, cls.witness};
  if (cls.branch == Branch::NoRangeInclusion)
    return NoMeasure{NoMeasure::Reason::RangeInclusionFails, cls.witness};

  SchurData sd = *compute_schur(s);
  SymMatrix C2 = choose_C2(sd, cls.branch);
  MomentMatrix M2 = assemble_M2(s, C2);

  const int r2 = rank(M2.mat());
  if (r2 != cls.rank_M1 + rank_delta(C2, sd))
    throw InternalError("solve: rank additivity rank M(2) = rank M(1) + rank(C2 - W^T M(1) W) failed");
  if (cls.branch == Branch::FlatEqual ? r2 != cls.rank_M1 : r2 != 4)
    throw InternalError("solve: constructed M(2) has unexpected rank for its branch");
  if (!is_psd(M2.mat())) throw InternalError("solve: constructed M(2) is not PSD");

  RelationBasis rb = extract_relations(M2);
  MomentMatrix M3 = build_flat_M3(M2, rb.relations);
  const int r3 = rank(M3.mat());

  Variety var = common_zeros(rb.relations, tol);
  if (static_cast<int>(var.points.size()) != r2) {
    std::ostringstream os;
    os << "variety has " << var.points.size() << " points but the flat moment matrix has rank "
       << r2;
    throw CardinalityMismatch(os.str());
  }

  std::vector<std::array<double, 2>> atoms;
  atoms.reserve(var.points.size());
  for (const auto& p : var.points) atoms.push_back({p.x, p.y});
  std::vector<double> lvals;
  lvals.reserve(rb.basis.size());
  for (Mono m : rb.basis) lvals.push_back(riesz(Poly2::monomial(m), s).to_double());
  std::vector<double> weights = solve_weights(atoms, rb.basis, lvals);
  refine_weights(s, atoms, weights);

  AtomicMeasure measure(std::move(atoms), std::move(weights));
  if (measure.size() != var.points.size())
    throw InternalError("solve: atom merge collapsed distinct variety points");

  VerifyReport rep = verify_measure(s, measure, tol);
  if (!rep.pass) {
    std::ostringstream os;
    os << "reconstructed measure fails verification: max abs error " << rep.max_abs_error
       << " at tolerance " << tol;
    throw VerificationFailed(os.str());
  }

  return Solution{std::move(measure),
                  ExtensionCertificate{M2, M3, r2, r3, rb.relations},
                  std::move(cls),
                  std::move(sd),
                  std::move(rep)};
}

}  // namespace momsolve
