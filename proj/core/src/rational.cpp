#include "momsolve/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace momsolve {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(static_cast<signed long>(n), static_cast<signed long>(d));
  v_.canonicalize();
}

Rational::Rational(double d) {
  if (!std::isfinite(d)) throw std::domain_error("Rational: non-finite double");
  v_ = mpq_class(d);  // exact binary expansion, already canonical
}

Rational::Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

std::optional<Rational> Rational::parse(std::string_view text) {
  // Strict shape check before handing off to GMP: [+-]?digits(/digits)?
  // GMP itself tolerates whitespace and empty parts, which we reject.
  std::size_t pos = 0;
  auto digits = [&](std::size_t start) {
    std::size_t p = start;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    return p - start;
  };
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  std::size_t nd = digits(pos);
  if (nd == 0) return std::nullopt;
  pos += nd;
  if (pos < text.size()) {
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    std::size_t dd = digits(pos);
    if (dd == 0 || pos + dd != text.size()) return std::nullopt;
  }
  // GMP accepts a leading '-' but not '+'; the shape check above allows both.
  if (text.front() == '+') text.remove_prefix(1);
  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), std::string(text).c_str(), 10) != 0) return std::nullopt;
  if (v.get_den() == 0) return std::nullopt;
  v.canonicalize();
  Rational r;
  r.v_ = v;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::pow(unsigned e) const {
  Rational r(1);
  Rational base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

}  // namespace momsolve
