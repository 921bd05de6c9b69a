#include "momsolve/poly.hpp"

#include <cmath>
#include <ostream>

namespace momsolve {

std::ostream& operator<<(std::ostream& os, const Mono& m) {
  if (m.i == 0 && m.j == 0) return os << "1";
  if (m.i > 0) {
    os << "x";
    if (m.i > 1) os << "^" << m.i;
  }
  if (m.j > 0) {
    os << "y";
    if (m.j > 1) os << "^" << m.j;
  }
  return os;
}

Poly2::Poly2(const Rational& constant) {
  if (!constant.is_zero()) c_[Mono{0, 0}] = constant;
}

Poly2 Poly2::monomial(Mono m, const Rational& coeff) {
  Poly2 p;
  if (!coeff.is_zero()) p.c_[m] = coeff;
  return p;
}

Rational Poly2::coeff(Mono m) const {
  auto it = c_.find(m);
  return it == c_.end() ? Rational(0) : it->second;
}

void Poly2::set_coeff(Mono m, const Rational& v) {
  if (v.is_zero())
    c_.erase(m);
  else
    c_[m] = v;
}

void Poly2::add_term(Mono m, const Rational& v) {
  auto it = c_.find(m);
  if (it == c_.end()) {
    if (!v.is_zero()) c_[m] = v;
    return;
  }
  it->second += v;
  if (it->second.is_zero()) c_.erase(it);
}

int Poly2::degree() const {
  int d = -1;
  for (const auto& [m, v] : c_) d = std::max(d, m.degree());
  return d;
}

int Poly2::degree_in_x() const {
  int d = 0;
  for (const auto& [m, v] : c_) d = std::max(d, m.i);
  return d;
}

int Poly2::degree_in_y() const {
  int d = 0;
  for (const auto& [m, v] : c_) d = std::max(d, m.j);
  return d;
}

Poly2 Poly2::mul_mono(Mono m) const {
  Poly2 p;
  for (const auto& [t, v] : c_) p.c_[Mono{t.i + m.i, t.j + m.j}] = v;
  return p;
}

double Poly2::eval(double x, double y) const {
  double s = 0;
  for (const auto& [m, v] : c_) s += v.to_double() * std::pow(x, m.i) * std::pow(y, m.j);
  return s;
}

Rational Poly2::eval_exact(const Rational& x, const Rational& y) const {
  Rational s(0);
  for (const auto& [m, v] : c_)
    s += v * x.pow(static_cast<unsigned>(m.i)) * y.pow(static_cast<unsigned>(m.j));
  return s;
}

double Poly2::one_norm() const {
  double s = 0;
  for (const auto& [m, v] : c_) s += std::fabs(v.to_double());
  return s;
}

Poly2 Poly2::operator-() const {
  Poly2 p;
  for (const auto& [m, v] : c_) p.c_[m] = -v;
  return p;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [m, v] : o.c_) add_term(m, v);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [m, v] : o.c_) add_term(m, -v);
  return *this;
}

Poly2& Poly2::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [m, v] : c_) v *= s;
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 p;
  for (const auto& [ma, va] : a.c_)
    for (const auto& [mb, vb] : b.c_) p.add_term(Mono{ma.i + mb.i, ma.j + mb.j}, va * vb);
  return p;
}

std::ostream& operator<<(std::ostream& os, const Poly2& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [m, v] : p.c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v << ")";
    if (m.degree() > 0) os << "*" << m;
  }
  return os;
}

}  // namespace momsolve
