#include "momsolve/extension.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "momsolve/errors.hpp"

namespace momsolve {

namespace {

std::string vec_str(const std::vector<Rational>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
  os << ")";
  return os.str();
}

Rational quad_form(const SymMatrix& A, const std::vector<Rational>& v) {
  Rational s(0);
  for (int i = 0; i < A.dim(); ++i) {
    if (v[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < A.dim(); ++j)
      s += v[static_cast<std::size_t>(i)] * A.at(i, j) * v[static_cast<std::size_t>(j)];
  }
  return s;
}

}  // namespace

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::FlatEqual: return "FlatEqual";
    case Branch::Greater: return "Greater";
    case Branch::Less: return "Less";
    case Branch::NotPsd: return "NotPsd";
    case Branch::NoRangeInclusion: return "NoRangeInclusion";
  }
  return "?";
}

SymMatrix SchurData::S() const {
  SymMatrix s(3);
  s.set(0, 0, x);
  s.set(0, 1, a);
  s.set(0, 2, b);
  s.set(1, 1, y);
  s.set(1, 2, t);
  s.set(2, 2, z);
  return s;
}

std::optional<SchurData> compute_schur(const MomentSequence3& s) {
  MomentMatrix M1 = build_M1(s);
  RectMatrix B2 = build_B2(s);
  std::optional<RectMatrix> W = solve_sym(M1.mat(), B2);
  if (!W) return std::nullopt;
  RectMatrix S = W->transpose() * (M1.mat().to_rect() * (*W));
  auto sym = SymMatrix::from_rect(S);
  if (!sym) throw InternalError("compute_schur: W^T M(1) W is not symmetric");
  return SchurData{std::move(*W),        sym->at(0, 0), sym->at(0, 1), sym->at(0, 2),
                   sym->at(1, 1), sym->at(1, 2), sym->at(2, 2)};
}

Classification classify(const MomentSequence3& s) {
  MomentMatrix M1 = build_M1(s);
  const int r1 = rank(M1.mat());
  if (auto v = psd_violation_witness(M1.mat())) {
    std::ostringstream os;
    os << "M(1) is not positive semidefinite: v^T M(1) v = " << quad_form(M1.mat(), *v)
       << " < 0 for v = " << vec_str(*v);
    return Classification{Branch::NotPsd, r1, os.str()};
  }
  auto sd = compute_schur(s);
  if (!sd) {
    RectMatrix B2 = build_B2(s);
    for (const auto& z : kernel_basis(M1.mat().to_rect())) {
      std::vector<Rational> zb(3, Rational(0));
      bool nonzero = false;
      for (int c = 0; c < 3; ++c) {
        for (int r = 0; r < 3; ++r) zb[static_cast<std::size_t>(c)] += z[static_cast<std::size_t>(r)] * B2.at(r, c);
        nonzero = nonzero || !zb[static_cast<std::size_t>(c)].is_zero();
      }
      if (nonzero) {
        std::ostringstream os;
        os << "Ran B(2) is not contained in Ran M(1): kernel vector z = " << vec_str(z)
           << " of M(1) has z^T B(2) = " << vec_str(zb);
        return Classification{Branch::NoRangeInclusion, r1, os.str()};
      }
    }
    throw InternalError("classify: range inclusion failed but no kernel witness found");
  }
  Branch br = sd->b == sd->y   ? Branch::FlatEqual
              : sd->b > sd->y ? Branch::Greater
                              : Branch::Less;
  if (br != Branch::FlatEqual && r1 != 3)
    throw InternalError(
        "classify: b != y with singular M(1); PSD plus range inclusion at rank <= 2 forces b = y");
  return Classification{br, r1, ""};
}

SymMatrix choose_C2(const SchurData& sd, Branch branch) {
  switch (branch) {
    case Branch::FlatEqual:
      return sd.S();
    case Branch::Greater: {
      SymMatrix c(3);
      c.set(0, 0, sd.x);
      c.set(0, 1, sd.a);
      c.set(0, 2, sd.b);
      c.set(1, 1, sd.b);
      c.set(1, 2, sd.t);
      c.set(2, 2, sd.z);
      return c;
    }
    case Branch::Less: {
      Rational gap = sd.y - sd.b;
      SymMatrix c(3);
      c.set(0, 0, sd.x + Rational(1));
      c.set(0, 1, sd.a);
      c.set(0, 2, sd.y);
      c.set(1, 1, sd.y);
      c.set(1, 2, sd.t);
      c.set(2, 2, sd.z + gap * gap);
      return c;
    }
    case Branch::NotPsd:
    case Branch::NoRangeInclusion:
      break;
  }
  throw std::invalid_argument("choose_C2: no quartic block exists for a failure branch");
}

int rank_delta(const SymMatrix& C2, const SchurData& sd) { return rank(C2 - sd.S()); }

RelationBasis extract_relations(const MomentMatrix& M) {
  const MonomialIndex& idx = M.index();
  const RectMatrix A = M.mat().to_rect();
  const int n = idx.size();
  RelationBasis out;
  std::vector<int> accepted;
  for (int j = 0; j < n; ++j) {
    RectMatrix cols(n, static_cast<int>(accepted.size()));
    for (int c = 0; c < static_cast<int>(accepted.size()); ++c)
      for (int r = 0; r < n; ++r) cols.at(r, c) = A.at(r, accepted[static_cast<std::size_t>(c)]);
    RectMatrix target(n, 1);
    for (int r = 0; r < n; ++r) target.at(r, 0) = A.at(r, j);
    if (auto coeffs = solve_general(cols, target)) {
      Poly2 p = Poly2::monomial(idx.at(j), Rational(-1));
      for (int c = 0; c < static_cast<int>(accepted.size()); ++c)
        p.add_term(idx.at(accepted[static_cast<std::size_t>(c)]), coeffs->at(c, 0));
      out.relations.push_back(RelationPoly{idx.at(j), std::move(p)});
    } else {
      accepted.push_back(j);
      out.basis.push_back(idx.at(j));
    }
  }
  return out;
}

namespace {

// Value of the M(3) entry at (row, degree-3 column u) implied by the degree
// <= 2 definition of u: sum of def coefficients against shifted moments.
Rational path_value(const Poly2& def, Mono row, const std::map<Mono, Rational>& moments) {
  Rational v(0);
  for (const auto& [m, c] : def.terms()) {
    auto it = moments.find(Mono{m.i + row.i, m.j + row.j});
    if (it == moments.end()) throw InternalError("build_flat_M3: missing moment on a path");
    v += c * it->second;
  }
  return v;
}

}  // namespace

MomentMatrix build_flat_M3(const MomentMatrix& M2, const std::vector<RelationPoly>& relations) {
  if (M2.degree() != 2) throw std::invalid_argument("build_flat_M3: M2 must have degree 2");
  std::map<Mono, Rational> moments = M2.moments();

  // Products of every relation with X and Y, X-multiplied forms first.
  std::vector<Poly2> products;
  for (Mono mult : {Mono{1, 0}, Mono{0, 1}})
    for (const auto& rel : relations) products.push_back(rel.poly.mul_mono(mult));

  // Resolve the four degree-3 columns: repeatedly pick a product with exactly
  // one undefined degree-3 monomial and solve for it. Later products that
  // revisit a defined column are handled by the full verification below.
  std::map<Mono, Poly2> defs;
  std::vector<Mono> def_order;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Poly2& q : products) {
      Mono pending{-1, -1};
      int undefined = 0;
      for (const auto& [m, c] : q.terms()) {
        if (m.degree() == 3 && !defs.count(m)) {
          pending = m;
          ++undefined;
        }
      }
      if (undefined != 1) continue;
      Poly2 d;
      Rational lead(0);
      for (const auto& [m, c] : q.terms()) {
        if (m == pending) {
          lead = c;
        } else if (m.degree() == 3) {
          d += c * defs.at(m);
        } else {
          d.add_term(m, c);
        }
      }
      d *= Rational(-1) / lead;
      defs.emplace(pending, std::move(d));
      def_order.push_back(pending);
      progress = true;
    }
  }
  const MonomialIndex idx3(3);
  for (int k = 0; k < idx3.size(); ++k) {
    Mono m = idx3.at(k);
    if (m.degree() == 3 && !defs.count(m)) {
      std::ostringstream os;
      os << "build_flat_M3: column " << m
         << " is not forced by the relations; M(2) is not recursively determined";
      throw std::invalid_argument(os.str());
    }
  }

  // Degree-5 then degree-6 moments: first path in definition order fixes the
  // value, every other path must reproduce it exactly.
  for (int total = 5; total <= 6; ++total) {
    const int row_degree = total - 3;
    std::map<Mono, Rational> fresh;
    for (int i = total; i >= 0; --i) {
      Mono target{i, total - i};
      bool have = false;
      Rational value(0);
      for (Mono u : def_order) {
        Mono row{target.i - u.i, target.j - u.j};
        if (row.i < 0 || row.j < 0 || row.degree() != row_degree) continue;
        Rational v = path_value(defs.at(u), row, moments);
        if (!have) {
          value = v;
          have = true;
        } else if (v != value) {
          std::ostringstream os;
          os << "conflicting derivations for beta_" << target.i << target.j << ": " << value
             << " vs " << v << " via column " << u;
          throw ConflictingMoments(os.str());
        }
      }
      if (!have) throw InternalError("build_flat_M3: moment with no derivation path");
      fresh[target] = value;
    }
    for (auto& [m, v] : fresh) moments[m] = v;
  }

  // Full recursive-generation check: every relation product must vanish as a
  // column combination against every row of degree <= 3.
  for (const Poly2& q : products) {
    for (int r = 0; r < idx3.size(); ++r) {
      Mono row = idx3.at(r);
      Rational v(0);
      for (const auto& [m, c] : q.terms()) v += c * moments.at(Mono{m.i + row.i, m.j + row.j});
      if (!v.is_zero()) {
        std::ostringstream os;
        os << "relation product " << q << " fails against row " << row << " with residual " << v;
        throw ConflictingMoments(os.str());
      }
    }
  }

  MomentMatrix M3(3, moments);
  if (rank(M3.mat()) != rank(M2.mat()))
    throw InternalError("build_flat_M3: extension is not flat despite consistent derivations");
  return M3;
}

}  // namespace momsolve
