#ifndef EXTREMAL_RATIONAL_HPP
#define EXTREMAL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace extremal {

/// Exact arbitrary-precision rational. Always kept in lowest terms with a
/// positive denominator; the canonical zero is 0/1. All arithmetic is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long value) : v_(value) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  explicit Rational(const mpz_class& value) : v_(value) {}
  Rational(const mpz_class& num, const mpz_class& den);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const;

  /// "p" when integral, "p/q" otherwise.
  std::string str() const;

  /// Parses "p" or "p/q" (optional leading sign). Throws domain_error on
  /// malformed text or a zero denominator.
  static Rational parse(const std::string& text);

 private:
  mpq_class v_;  // invariant: canonical form
};

/// base^exp for integer base, exp >= 0.
mpz_class int_pow(const mpz_class& base, unsigned long exp);

}  // namespace extremal

#endif
