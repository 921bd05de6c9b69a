#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace momsolve::cli;

  CLI::App app{"Cubic moment problem solver: decides whether ten real moments "
               "beta_ij (i+j <= 3) admit a positive atomic representing measure "
               "and constructs a minimal one with rank certificates."};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand(
      "solve", "Solve a problem file; print atoms and weights as JSON on stdout");
  solve->add_option("problem", solve_opt.problem_path, "problem JSON file")->required();
  solve->add_option("--tol", solve_opt.tol, "verification tolerance (overrides the file)")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--certificate", solve_opt.certificate,
                  "include the moment matrix extension certificate in the output");
  solve->add_flag("--exact", solve_opt.exact,
                  "print certificate entries as exact \"p/q\" strings");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand(
      "verify", "Check a measure file against a problem file; print a report as JSON");
  verify->add_option("problem", verify_opt.problem_path, "problem JSON file")->required();
  verify->add_option("measure", verify_opt.measure_path, "measure JSON file")->required();
  verify->add_option("--tol", verify_opt.tol, "relative tolerance (overrides the file)")
      ->check(CLI::PositiveNumber);

  SynthOptions synth_opt;
  auto* synth = app.add_subcommand(
      "synth", "Compute the ten moments of a measure file; print a problem file as JSON");
  synth->add_option("measure", synth_opt.measure_path, "measure JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitBadInput;
  }

  if (solve->parsed()) return cmd_solve(solve_opt, std::cout, std::cerr);
  if (verify->parsed()) return cmd_verify(verify_opt, std::cout, std::cerr);
  return cmd_synth(synth_opt, std::cout, std::cerr);
}
