#pragma once

#include <stdexcept>
#include <string>

namespace momsolve {

/// Base for failures that mean the pipeline could not complete, as opposed to
/// the well-formed negative answer "no representing measure exists". The CLI
/// maps these to exit code 3.
class DiagnosticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two derivation paths for the same degree-5 or degree-6 moment disagree, so
/// the claimed flat degree-3 extension does not exist as presented.
class ConflictingMoments : public DiagnosticError {
 public:
  using DiagnosticError::DiagnosticError;
};

/// The relations cut out a positive-dimensional zero set instead of finitely
/// many points.
class InfiniteVariety : public DiagnosticError {
 public:
  using DiagnosticError::DiagnosticError;
};

/// The basis-restricted evaluation matrix at the computed atoms is singular.
class SingularVandermonde : public DiagnosticError {
 public:
  using DiagnosticError::DiagnosticError;
};

/// A computed density is zero or negative, so no positive measure results.
class NonpositiveWeight : public DiagnosticError {
 public:
  using DiagnosticError::DiagnosticError;
};

/// The number of computed variety points does not match the rank of the flat
/// moment matrix.
class CardinalityMismatch : public DiagnosticError {
 public:
  using DiagnosticError::DiagnosticError;
};

/// The reconstructed measure fails to reproduce the input moments at the
/// pipeline tolerance.
class VerificationFailed : public DiagnosticError {
 public:
  using DiagnosticError::DiagnosticError;
};

/// A condition the underlying theory guarantees was violated; indicates a bug
/// rather than a property of the input.
class InternalError : public DiagnosticError {
 public:
  using DiagnosticError::DiagnosticError;
};

}  // namespace momsolve
