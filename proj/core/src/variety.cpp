#include "momsolve/variety.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "momsolve/errors.hpp"

namespace momsolve {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

void UniPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) throw std::logic_error("UniPoly: leading coefficient of zero polynomial");
  return c_.back();
}

Rational UniPoly::eval_exact(const Rational& x) const {
  Rational v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

double UniPoly::eval(double x) const {
  double v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + it->to_double();
  return v;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return UniPoly();
  return (Rational(1) / c_.back()) * (*this);
}

UniPoly UniPoly::squarefree_part() const {
  if (is_zero()) return UniPoly();
  if (degree() == 0) return UniPoly::constant(Rational(1));
  UniPoly g = gcd(*this, derivative());
  if (g.degree() == 0) return monic();
  auto [q, r] = divmod(*this, g);
  if (!r.is_zero()) throw std::logic_error("UniPoly: squarefree division left a remainder");
  return q.monic();
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> d(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) d[k] = -c_[k];
  return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return UniPoly(std::move(d));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> d(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(d));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
  std::vector<Rational> d(a.c_.size());
  for (std::size_t k = 0; k < a.c_.size(); ++k) d[k] = s * a.c_[k];
  return UniPoly(std::move(d));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const Rational& lead = b.c_.back();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + b.degree())] / lead;
    quo[static_cast<std::size_t>(k)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<std::size_t>(k + j)] -= f * b.c_[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = r.monic();  // positive rescale keeps the root set, bounds growth
  }
  return a.monic();
}

namespace {

Poly2 swap_xy(const Poly2& p) {
  Poly2 q;
  for (const auto& [m, c] : p.terms()) q.set_coeff(Mono{m.j, m.i}, c);
  return q;
}

// Coefficients of p viewed as a polynomial in y over Q[x]; index = y power.
std::vector<UniPoly> y_coefficients(const Poly2& p) {
  std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(p.degree_in_y()) + 1);
  for (const auto& [m, c] : p.terms()) {
    auto& row = raw[static_cast<std::size_t>(m.j)];
    if (static_cast<int>(row.size()) <= m.i) row.resize(static_cast<std::size_t>(m.i) + 1, Rational(0));
    row[static_cast<std::size_t>(m.i)] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& row : raw) out.emplace_back(std::move(row));
  return out;
}

UniPoly poly_pow(const UniPoly& base, int e) {
  UniPoly r = UniPoly::constant(Rational(1));
  for (int k = 0; k < e; ++k) r = r * base;
  return r;
}

UniPoly determinant(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly::constant(Rational(1));
  if (n == 1) return m[0][0];
  UniPoly det;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    std::vector<std::vector<UniPoly>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.emplace_back(m[r].begin() + 1, m[r].end());
    }
    UniPoly term = m[i][0] * determinant(std::move(minor));
    det = (i % 2 == 0) ? det + term : det - term;
  }
  return det;
}

UniPoly resultant_impl(const Poly2& p, const Poly2& q) {
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("resultant: zero polynomial argument");
  std::vector<UniPoly> a = y_coefficients(p);
  std::vector<UniPoly> b = y_coefficients(q);
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  UniPoly result;
  if (m == 0 && n == 0) {
    result = UniPoly::constant(Rational(1));
  } else if (m == 0) {
    result = poly_pow(a[0], n);
  } else if (n == 0) {
    result = poly_pow(b[0], m);
  } else {
    const int dim = m + n;
    std::vector<std::vector<UniPoly>> syl(static_cast<std::size_t>(dim),
                                          std::vector<UniPoly>(static_cast<std::size_t>(dim)));
    for (int r = 0; r < n; ++r)
      for (int k = 0; k <= m; ++k) syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = a[static_cast<std::size_t>(m - k)];
    for (int r = 0; r < m; ++r)
      for (int k = 0; k <= n; ++k) syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = b[static_cast<std::size_t>(n - k)];
    result = determinant(std::move(syl));
  }
  if (result.is_zero())
    throw IdenticallyZeroResultant("resultant is identically zero: common polynomial factor");
  return result;
}

}  // namespace

UniPoly resultant_y(const Poly2& p, const Poly2& q) { return resultant_impl(p, q); }

UniPoly resultant_x(const Poly2& p, const Poly2& q) {
  return resultant_impl(swap_xy(p), swap_xy(q));
}

namespace {

// Sturm sequence of a squarefree polynomial, each remainder rescaled by a
// positive factor to keep coefficient growth down.
std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain;
  chain.push_back(p);
  UniPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(std::move(d));
  while (chain.back().degree() > 0) {
    auto [q, r] = UniPoly::divmod(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    r = -r;
    chain.push_back((Rational(1) / r.leading().abs()) * r);
  }
  return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
  int count = 0, prev = 0;
  for (const UniPoly& p : chain) {
    int s = p.eval_exact(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

struct Isolation {
  std::vector<std::pair<Rational, Rational>> intervals;  // each holds exactly one root
  std::vector<Rational> exact;                           // roots hit exactly
};

void isolate(const UniPoly& p, const std::vector<UniPoly>& chain, const Rational& lo,
             const Rational& hi, int vlo, int vhi, Isolation& out) {
  const int count = vlo - vhi;
  if (count <= 0) return;
  if (count == 1) {
    out.intervals.emplace_back(lo, hi);
    return;
  }
  const Rational half(1, 2);
  Rational mid = (lo + hi) * half;
  if (p.eval_exact(mid).is_zero()) {
    out.exact.push_back(mid);
    // Carve out a punctured neighbourhood containing only this root.
    Rational delta = (hi - lo) * Rational(1, 16);
    for (;;) {
      Rational a = mid - delta, b = mid + delta;
      if (!p.eval_exact(a).is_zero() && !p.eval_exact(b).is_zero() &&
          sign_variations(chain, a) - sign_variations(chain, b) == 1)
        break;
      delta *= half;
    }
    Rational a = mid - delta, b = mid + delta;
    isolate(p, chain, lo, a, vlo, sign_variations(chain, a), out);
    isolate(p, chain, b, hi, sign_variations(chain, b), vhi, out);
    return;
  }
  const int vm = sign_variations(chain, mid);
  isolate(p, chain, lo, mid, vlo, vm, out);
  isolate(p, chain, mid, hi, vm, vhi, out);
}

double newton_polish(const UniPoly& p, const UniPoly& dp, double x0, double lo, double hi) {
  double x = x0;
  const double slack = (hi - lo) + 1e-12;
  for (int it = 0; it < 60; ++it) {
    double f = p.eval(x);
    if (f == 0) return x;
    double df = dp.eval(x);
    if (df == 0) break;
    double step = f / df;
    double next = x - step;
    if (next < lo - slack || next > hi + slack) break;
    x = next;
    if (std::fabs(step) <= 1e-17 * std::max(1.0, std::fabs(x))) break;
  }
  return std::fabs(p.eval(x)) <= std::fabs(p.eval(x0)) ? x : x0;
}

}  // namespace

std::vector<double> real_roots(const UniPoly& p, double tol) {
  if (p.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
  if (!(tol > 0)) throw std::invalid_argument("real_roots: tolerance must be positive");
  UniPoly sf = p.squarefree_part();
  if (sf.degree() <= 0) return {};
  if (sf.degree() == 1) return {(-sf.coeff(0) / sf.coeff(1)).to_double()};

  // Cauchy bound: every root satisfies |r| < 1 + max |c_k| / |c_n|.
  Rational maxabs(0);
  for (int k = 0; k < sf.degree(); ++k) {
    Rational a = sf.coeff(k).abs();
    if (a > maxabs) maxabs = a;
  }
  Rational bound = Rational(1) + maxabs / sf.leading().abs();

  std::vector<UniPoly> chain = sturm_chain(sf);
  Isolation iso;
  isolate(sf, chain, -bound, bound, sign_variations(chain, -bound),
          sign_variations(chain, bound), iso);

  const Rational width(std::min(tol, 1e-12));
  const UniPoly dsf = sf.derivative();
  std::vector<double> roots;
  for (const Rational& r : iso.exact) roots.push_back(r.to_double());
  for (auto [lo, hi] : iso.intervals) {
    const int slo = sf.eval_exact(lo).sign();
    bool exact_hit = false;
    while (hi - lo > width) {
      Rational mid = (lo + hi) * Rational(1, 2);
      int sm = sf.eval_exact(mid).sign();
      if (sm == 0) {
        roots.push_back(mid.to_double());
        exact_hit = true;
        break;
      }
      (sm == slo ? lo : hi) = mid;
    }
    if (exact_hit) continue;
    double lod = lo.to_double(), hid = hi.to_double();
    double mid = 0.5 * (lod + hid);
    roots.push_back(newton_polish(sf, dsf, mid, lod, hid));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// Real roots of a dense double polynomial of degree <= 3, low order first.
std::vector<double> float_roots_cubic(std::vector<double> c) {
  double scale = 0;
  for (double v : c) scale = std::max(scale, std::fabs(v));
  if (scale == 0) return {};
  while (c.size() > 1 && std::fabs(c.back()) <= 1e-12 * scale) c.pop_back();
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg <= 0) return {};
  if (deg == 1) return {-c[0] / c[1]};
  if (deg == 2) {
    double a = c[2], b = c[1], k = c[0];
    double disc = b * b - 4 * a * k;
    if (disc < 0) {
      if (disc < -1e-10 * (b * b + std::fabs(4 * a * k))) return {};
      disc = 0;
    }
    double s = std::sqrt(disc);
    double q = -0.5 * (b + (b >= 0 ? s : -s));
    std::vector<double> roots;
    if (q != 0) {
      roots.push_back(q / a);
      roots.push_back(k / q);
    } else {
      roots.push_back(-b / (2 * a));
    }
    return roots;
  }
  // Depressed cubic t^3 + pt + q with x = t - a2/3.
  double a2 = c[2] / c[3], a1 = c[1] / c[3], a0 = c[0] / c[3];
  double pp = a1 - a2 * a2 / 3.0;
  double qq = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
  double disc = 0.25 * qq * qq + pp * pp * pp / 27.0;
  std::vector<double> roots;
  if (disc > 0) {
    double s = std::sqrt(disc);
    double u = std::cbrt(-0.5 * qq + s), v = std::cbrt(-0.5 * qq - s);
    roots.push_back(u + v - a2 / 3.0);
  } else {
    double r = std::sqrt(std::max(0.0, -pp / 3.0));
    if (r == 0) {
      roots.push_back(-a2 / 3.0);
    } else {
      double arg = std::clamp(3.0 * qq / (2.0 * pp * r), -1.0, 1.0);
      double theta = std::acos(arg);
      for (int k = 0; k < 3; ++k)
        roots.push_back(2 * r * std::cos((theta - 2 * M_PI * k) / 3.0) - a2 / 3.0);
    }
  }
  // One Newton step per root against the original cubic sharpens them.
  for (double& x : roots)
    for (int it = 0; it < 3; ++it) {
      double f = ((c[3] * x + c[2]) * x + c[1]) * x + c[0];
      double df = (3 * c[3] * x + 2 * c[2]) * x + c[1];
      if (df == 0) break;
      x -= f / df;
    }
  return roots;
}

double residual_scale(const Poly2& p, double x, double y) {
  double m = std::max({1.0, std::fabs(x), std::fabs(y)});
  return 1.0 + p.one_norm() * m * m * m;
}

double max_residual(const std::vector<Poly2>& polys, double x, double y) {
  double r = 0;
  for (const Poly2& p : polys) r = std::max(r, std::fabs(p.eval(x, y)));
  return r;
}

std::array<double, 2> gradient(const Poly2& p, double x, double y) {
  double gx = 0, gy = 0;
  for (const auto& [m, c] : p.terms()) {
    double cd = c.to_double();
    if (m.i > 0) gx += cd * m.i * std::pow(x, m.i - 1) * std::pow(y, m.j);
    if (m.j > 0) gy += cd * m.j * std::pow(x, m.i) * std::pow(y, m.j - 1);
  }
  return {gx, gy};
}

// A few Gauss-Newton steps on the stacked relation residuals. Root isolation
// works coordinate by coordinate, so the second coordinate of a candidate can
// carry an amplified error when it was back-substituted through a relation
// with a small leading value. Polishing against the full system restores the
// lost accuracy; the point is only replaced when its residual improves.
void polish_point(const std::vector<Poly2>& polys, double& x, double& y) {
  double best_x = x, best_y = y, best = max_residual(polys, x, y);
  double cx = x, cy = y;
  for (int it = 0; it < 8; ++it) {
    double a11 = 0, a12 = 0, a22 = 0, g1 = 0, g2 = 0;
    for (const Poly2& p : polys) {
      double f = p.eval(cx, cy);
      auto [px, py] = gradient(p, cx, cy);
      a11 += px * px;
      a12 += px * py;
      a22 += py * py;
      g1 += px * f;
      g2 += py * f;
    }
    double det = a11 * a22 - a12 * a12;
    if (!(std::fabs(det) > 0)) break;
    double dx = -(a22 * g1 - a12 * g2) / det;
    double dy = -(a11 * g2 - a12 * g1) / det;
    if (!std::isfinite(dx) || !std::isfinite(dy)) break;
    cx += dx;
    cy += dy;
    double r = max_residual(polys, cx, cy);
    if (r < best) {
      best = r;
      best_x = cx;
      best_y = cy;
    }
    if (std::fabs(dx) + std::fabs(dy) <= 1e-15 * (1 + std::fabs(cx) + std::fabs(cy))) break;
  }
  x = best_x;
  y = best_y;
}

bool refine_and_accept(const std::vector<Poly2>& polys, double tol, double& x, double& y,
                       double& residual) {
  polish_point(polys, x, y);
  residual = 0;
  for (const Poly2& p : polys) {
    double v = std::fabs(p.eval(x, y));
    if (v > tol * residual_scale(p, x, y)) return false;
    residual = std::max(residual, v);
  }
  return true;
}

Variety finalize(std::vector<VarietyPoint> pts) {
  std::vector<VarietyPoint> unique;
  for (const auto& p : pts) {
    bool dup = false;
    for (const auto& q : unique)
      if (std::max(std::fabs(p.x - q.x), std::fabs(p.y - q.y)) < 1e-8) {
        dup = true;
        break;
      }
    if (!dup) unique.push_back(p);
  }
  std::sort(unique.begin(), unique.end(), [](const VarietyPoint& a, const VarietyPoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  return Variety{std::move(unique)};
}

// Substitutes a linear relation (degree exactly 1) into the others and solves
// along the resulting line.
Variety solve_with_line(const std::vector<Poly2>& polys, std::size_t line_idx, double tol) {
  const Poly2& line = polys[line_idx];
  const Rational a0 = line.coeff(Mono{0, 0});
  const Rational bx = line.coeff(Mono{1, 0});
  const Rational cy = line.coeff(Mono{0, 1});
  std::vector<VarietyPoint> pts;
  if (!cy.is_zero()) {
    // y = -(a0 + bx x)/cy; substitute exactly into every other relation.
    Poly2 ynum;  // y = ynum / cy with ynum = -(a0 + bx x)
    ynum.add_term(Mono{0, 0}, -a0);
    ynum.add_term(Mono{1, 0}, -bx);
    std::vector<UniPoly> subs;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (k == line_idx) continue;
      // p(x, ynum/cy) * cy^deg_y: clear denominators term by term.
      const int dy = polys[k].degree_in_y();
      Poly2 acc;
      for (const auto& [m, c] : polys[k].terms()) {
        Poly2 term = Poly2::monomial(Mono{m.i, 0}, c * cy.pow(static_cast<unsigned>(dy - m.j)));
        for (int e = 0; e < m.j; ++e) term = term * ynum;
        acc += term;
      }
      std::vector<Rational> coeffs(static_cast<std::size_t>(acc.degree_in_x()) + 1, Rational(0));
      for (const auto& [m, c] : acc.terms()) coeffs[static_cast<std::size_t>(m.i)] = c;
      subs.push_back(UniPoly(std::move(coeffs)));
    }
    bool all_zero = true;
    UniPoly g;
    for (const UniPoly& s : subs)
      if (!s.is_zero()) {
        g = all_zero ? s : UniPoly::gcd(g, s);
        all_zero = false;
      }
    if (all_zero)
      throw InfiniteVariety("relations vanish along an entire line");
    if (g.degree() == 0) return Variety{};
    for (double x : real_roots(g, tol)) {
      double y = (-(a0.to_double() + bx.to_double() * x)) / cy.to_double();
      double res;
      if (refine_and_accept(polys, tol, x, y, res)) pts.push_back(VarietyPoint{x, y, res});
    }
    return finalize(std::move(pts));
  }
  if (!bx.is_zero()) {
    // Vertical line x = x0: substitute and solve for y via the swapped frame.
    Rational x0 = -a0 / bx;
    std::vector<UniPoly> subs;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (k == line_idx) continue;
      std::vector<UniPoly> yc = y_coefficients(polys[k]);
      std::vector<Rational> coeffs(yc.size(), Rational(0));
      for (std::size_t d = 0; d < yc.size(); ++d) coeffs[d] = yc[d].eval_exact(x0);
      subs.push_back(UniPoly(std::move(coeffs)));
    }
    bool all_zero = true;
    UniPoly g;
    for (const UniPoly& s : subs)
      if (!s.is_zero()) {
        g = all_zero ? s : UniPoly::gcd(g, s);
        all_zero = false;
      }
    if (all_zero)
      throw InfiniteVariety("relations vanish along an entire vertical line");
    if (g.degree() == 0) return Variety{};
    for (double y : real_roots(g, tol)) {
      double x = x0.to_double();
      double res;
      if (refine_and_accept(polys, tol, x, y, res)) pts.push_back(VarietyPoint{x, y, res});
    }
    return finalize(std::move(pts));
  }
  // Nonzero constant relation: empty zero set.
  return Variety{};
}

Variety intersect(const std::vector<Poly2>& polys, double tol, bool swapped);

Variety swap_variety(Variety v) {
  for (auto& p : v.points) std::swap(p.x, p.y);
  return v;
}

Variety intersect(const std::vector<Poly2>& polys, double tol, bool swapped) {
  for (const Poly2& p : polys)
    if (!p.is_zero() && p.degree() == 0) return Variety{};  // unsatisfiable constant

  for (std::size_t k = 0; k < polys.size(); ++k)
    if (polys[k].degree() == 1) return solve_with_line(polys, k, tol);

  // All relations free of y: x is pinned at common roots, y is unconstrained.
  bool all_y_free = true;
  for (const Poly2& p : polys) all_y_free = all_y_free && p.degree_in_y() == 0;
  if (all_y_free) {
    UniPoly g;
    bool first = true;
    for (const Poly2& p : polys) {
      std::vector<UniPoly> xc = y_coefficients(p);
      g = first ? xc[0] : UniPoly::gcd(g, xc[0]);
      first = false;
    }
    if (!g.is_zero() && g.degree() > 0 && !real_roots(g, tol).empty())
      throw InfiniteVariety("relations constrain only x; zero set contains vertical lines");
    return Variety{};
  }

  UniPoly g;
  bool any_nonzero = false;
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      UniPoly r;
      try {
        r = resultant_y(polys[i], polys[j]);
      } catch (const IdenticallyZeroResultant&) {
        continue;
      }
      if (r.degree() == 0) continue;  // no shared x-candidates from this pair
      g = any_nonzero ? UniPoly::gcd(g, r) : r.monic();
      any_nonzero = true;
    }
  if (!any_nonzero) {
    if (swapped)
      throw InfiniteVariety("pairwise resultants vanish identically in both variables");
    std::vector<Poly2> flipped;
    flipped.reserve(polys.size());
    for (const Poly2& p : polys) flipped.push_back(swap_xy(p));
    return swap_variety(intersect(flipped, tol, true));
  }
  if (g.degree() == 0) return Variety{};

  std::vector<VarietyPoint> pts;
  for (double x : real_roots(g, tol)) {
    std::vector<double> cands;
    // Back-substitution through a relation linear in y, when one applies.
    for (const Poly2& p : polys) {
      if (p.degree_in_y() != 1) continue;
      std::vector<UniPoly> yc = y_coefficients(p);
      double den = yc[1].eval(x);
      if (std::fabs(den) <= 1e-12 * residual_scale(p, x, 0)) continue;
      cands.push_back(-yc[0].eval(x) / den);
    }
    if (cands.empty()) {
      for (const Poly2& p : polys) {
        if (p.degree_in_y() < 1) continue;
        std::vector<UniPoly> yc = y_coefficients(p);
        std::vector<double> spec(yc.size());
        for (std::size_t d = 0; d < yc.size(); ++d) spec[d] = yc[d].eval(x);
        for (double y : float_roots_cubic(spec)) cands.push_back(y);
      }
    }
    for (double y : cands) {
      double px = x, py = y;
      double res;
      if (refine_and_accept(polys, tol, px, py, res)) pts.push_back(VarietyPoint{px, py, res});
    }
  }
  return finalize(std::move(pts));
}

}  // namespace

Variety common_zeros(const std::vector<RelationPoly>& relations, double tol) {
  if (relations.empty()) throw std::invalid_argument("common_zeros: no relations given");
  if (!(tol > 0)) throw std::invalid_argument("common_zeros: tolerance must be positive");
  std::vector<Poly2> polys;
  polys.reserve(relations.size());
  for (const auto& r : relations) polys.push_back(r.poly);
  return intersect(polys, tol, false);
}

}  // namespace momsolve
