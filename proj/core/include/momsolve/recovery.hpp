#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "momsolve/extension.hpp"
#include "momsolve/moments.hpp"
#include "momsolve/variety.hpp"

namespace momsolve {

/// Certified negative answer: no positive atomic measure represents the
/// input. The witness is a human-readable exact certificate.
struct NoMeasure {
  enum class Reason { M1NotPsd, RangeInclusionFails };
  Reason reason;
  std::string witness;
};

const char* reason_name(NoMeasure::Reason r);

struct MomentCheck {
  Mono m;
  double expected;
  double computed;
  double abs_error;
  double rel_error;  // abs_error / (1 + |expected|), the quantity compared to tol
};

struct VerifyReport {
  bool pass;
  double tolerance;
  double max_abs_error;
  std::vector<MomentCheck> moments;  // the ten cubic moments, canonical order
};

/// Successful reconstruction: the measure, its flat extension certificate,
/// and the classification and Schur data that drove the branch choice.
struct Solution {
  AtomicMeasure measure;
  ExtensionCertificate certificate;
  Classification classification;
  SchurData schur;
  VerifyReport verification;
};

using SolveOutcome = std::variant<Solution, NoMeasure>;

/// Densities rho solving V rho = L, where V pairs the basis monomials
/// (rows) with the atoms (columns) and L holds the Riesz values of the basis
/// monomials. Requires a square system (atom count = basis size). Throws
/// SingularVandermonde when V is numerically singular and NonpositiveWeight
/// when any solved density fails rho > 0.
std::vector<double> solve_weights(const std::vector<std::array<double, 2>>& atoms,
                                  const std::vector<Mono>& basis,
                                  const std::vector<double>& basis_moments);

/// Recomputes the ten cubic moments of m and compares them against s:
/// pass iff |computed - beta| <= tol * (1 + |beta|) for every moment.
VerifyReport verify_measure(const MomentSequence3& s, const AtomicMeasure& m, double tol);

/// Full decision procedure for the cubic moment problem. Returns either a
/// minimal atomic representing measure with a flat extension certificate or
/// a certified NoMeasure. Pipeline faults (conflicting moment derivations,
/// infinite varieties, singular weight systems, nonpositive densities,
/// cardinality mismatches, failed final verification) are DiagnosticError
/// exceptions, deliberately distinct from the NoMeasure outcome.
SolveOutcome solve(const MomentSequence3& s, double tol = 1e-9);

}  // namespace momsolve
