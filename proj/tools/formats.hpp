#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "momsolve/moments.hpp"
#include "momsolve/recovery.hpp"

namespace momsolve::cli {

/// Malformed input file: bad JSON or a schema violation. Mapped to exit 1.
/// The message names the offending key or position.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parsed problem file: {"beta": {"i,j": number|"p/q", ...}, "tol"?: number}.
/// All ten cubic moments are required, beta_00 > 0, no extraneous keys.
struct ProblemFile {
  MomentSequence3 beta;
  std::optional<double> tol;
};

/// Parsed measure file: {"atoms": [[x, y], ...], "weights": [...]}.
/// Coordinates and weights are JSON numbers or "p/q" strings. The file is
/// exact when every value is a rational string or an integer literal; float
/// literals with fractional parts select the float pipeline.
struct MeasureFile {
  std::vector<std::array<Rational, 2>> atoms;
  std::vector<Rational> weights;
  bool exact;

  ExactMeasure to_exact() const { return ExactMeasure(atoms, weights); }
  AtomicMeasure to_double() const { return to_exact().to_double(); }
};

ProblemFile parse_problem(const std::string& text);
MeasureFile parse_measure(const std::string& text);

/// Doubles are printed with 17 significant digits so that every value
/// round-trips; all writers emit keys in a fixed order.
std::string format_double(double v);

std::string write_solution(const Solution& sol, bool with_certificate, bool exact);
std::string write_no_measure(const NoMeasure& nm);
std::string write_verify(const VerifyReport& rep);
std::string write_problem_exact(const std::map<Mono, Rational>& beta);
std::string write_problem_float(const std::map<Mono, double>& beta);

}  // namespace momsolve::cli
