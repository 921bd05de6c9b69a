#include "commands.hpp"

#include <fstream>
#include <sstream>
#include <variant>

#include <momsolve/errors.hpp>
#include <momsolve/recovery.hpp>

#include "formats.hpp"

namespace momsolve::cli {

namespace {

constexpr double kDefaultTol = 1e-9;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    ProblemFile pf = parse_problem(read_file(opt.problem_path));
    double tol = opt.tol ? *opt.tol : pf.tol.value_or(kDefaultTol);

    SolveOutcome outcome = solve(pf.beta, tol);
    if (const auto* nm = std::get_if<NoMeasure>(&outcome)) {
      out << write_no_measure(*nm) << "\n";
      err << "no representing measure: " << reason_name(nm->reason) << "\n";
      return kExitNoMeasure;
    }
    out << write_solution(std::get<Solution>(outcome), opt.certificate, opt.exact) << "\n";
    return kExitSuccess;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const DiagnosticError& e) {
    err << "diagnostic: " << e.what() << "\n";
    return kExitDiagnostic;
  }
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    ProblemFile pf = parse_problem(read_file(opt.problem_path));
    AtomicMeasure measure = parse_measure(read_file(opt.measure_path)).to_double();
    double tol = opt.tol ? *opt.tol : pf.tol.value_or(kDefaultTol);

    VerifyReport rep = verify_measure(pf.beta, measure, tol);
    out << write_verify(rep) << "\n";
    if (!rep.pass) {
      err << "verification failed: max |error| = " << format_double(rep.max_abs_error) << "\n";
      return kExitNoMeasure;
    }
    return kExitSuccess;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid measure: " << e.what() << "\n";
    return kExitBadInput;
  }
}

int cmd_synth(const SynthOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    MeasureFile mf = parse_measure(read_file(opt.measure_path));
    if (mf.exact) {
      out << write_problem_exact(moments_from_measure(mf.to_exact(), 3)) << "\n";
    } else {
      out << write_problem_float(moments_from_measure(mf.to_double(), 3)) << "\n";
    }
    return kExitSuccess;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid measure: " << e.what() << "\n";
    return kExitBadInput;
  }
}

}  // namespace momsolve::cli
