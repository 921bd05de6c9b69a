#pragma once

#include <optional>
#include <string>
#include <vector>

#include "momsolve/linalg.hpp"
#include "momsolve/moments.hpp"
#include "momsolve/poly.hpp"

namespace momsolve {

/// Branch taken by the existence analysis of the cubic problem. The first
/// three require M(1) PSD and Ran B(2) inside Ran M(1); they compare, exactly,
/// the (1,Y^2) entry b against the (XY,XY) entry y of W^T M(1) W.
enum class Branch { FlatEqual, Greater, Less, NotPsd, NoRangeInclusion };

const char* branch_name(Branch b);

struct Classification {
  Branch branch;
  int rank_M1;
  /// Human-readable certificate for the two failure branches: a rational
  /// direction v with v^T M(1) v < 0, or a kernel vector z of M(1) with
  /// z^T B(2) != 0. Empty otherwise.
  std::string witness;
};

/// W solving M(1) W = B(2) together with the entries of S = W^T M(1) W,
/// named x  a  b / a  y  t / b  t  z by position. S is invariant under the
/// choice of W, so the six values are well defined.
struct SchurData {
  RectMatrix W;
  Rational x, a, b, y, t, z;

  SymMatrix S() const;
};

/// Nullopt exactly when Ran B(2) is not contained in Ran M(1).
std::optional<SchurData> compute_schur(const MomentSequence3& s);

Classification classify(const MomentSequence3& s);

/// The quartic Hankel block C(2) completing M(2) for the given branch:
/// FlatEqual keeps W^T M(1) W itself; Greater substitutes b for the middle
/// entry; Less bumps the corners to x+1 and z+(y-b)^2 and sets both
/// cross entries to y. Throws std::invalid_argument for failure branches.
SymMatrix choose_C2(const SchurData& sd, Branch branch);

/// rank(C2 - W^T M(1) W): the rank increment of M(2) over M(1).
int rank_delta(const SymMatrix& C2, const SchurData& sd);

/// Column relation of a moment matrix: poly vanishes as a column combination,
/// with coefficient exactly -1 on the dependent monomial, i.e.
/// dependent = sum over basis of coeff * monomial.
struct RelationPoly {
  Mono dependent;
  Poly2 poly;
};

struct RelationBasis {
  /// Lex-first maximal independent column set, as monomials.
  std::vector<Mono> basis;
  /// One relation per dependent column, in column order.
  std::vector<RelationPoly> relations;
};

/// Greedy left-to-right column basis of M and the expression of every
/// dependent column over it. Requires M PSD (callers establish this).
RelationBasis extract_relations(const MomentMatrix& M);

/// The flat degree-3 extension of a recursively determined M(2): every
/// degree-3 column is forced by multiplying the column relations of M(2) by
/// X and Y. Degree-5 and degree-6 moments are derived from the first
/// available relation path in a fixed order; every alternative path is then
/// cross-checked exactly and ConflictingMoments is thrown on any mismatch.
MomentMatrix build_flat_M3(const MomentMatrix& M2, const std::vector<RelationPoly>& relations);

/// Flat extension certificate attached to every constructed measure.
struct ExtensionCertificate {
  MomentMatrix M2;
  MomentMatrix M3;
  int rank_M2;
  int rank_M3;  // invariant: rank_M3 = rank_M2, and M2 is the leading block of M3
  std::vector<RelationPoly> relations;
};

}  // namespace momsolve
