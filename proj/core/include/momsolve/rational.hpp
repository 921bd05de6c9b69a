#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace momsolve {

/// Arbitrary-precision rational number in canonical form.
///
/// Invariants: the denominator is strictly positive and gcd(num, den) = 1.
/// Every constructor and operation restores canonical form, so equality is
/// plain representation equality. Backed by GMP's mpq type.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}

  /// n/d reduced to canonical form. Throws std::domain_error when d = 0.
  Rational(long n, long d);

  /// Exact value of the double (every finite double is rational).
  /// Throws std::domain_error for NaN or infinity.
  explicit Rational(double d);

  explicit Rational(const mpq_class& v);
  explicit Rational(const mpz_class& n) : v_(n) {}

  /// Parses "p" or "p/q" with optional leading sign, base 10.
  /// Returns nullopt for malformed text or a zero denominator.
  static std::optional<Rational> parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  double to_double() const { return v_.get_d(); }

  /// "p" when integral, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

  Rational abs() const;
  Rational pow(unsigned e) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class v_;
};

}  // namespace momsolve
