#include "extremal/rational.hpp"

#include <cctype>

#include "extremal/errors.hpp"

namespace extremal {

Rational::Rational(long num, long den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw domain_error("empty rational literal");
  auto slash = s.find('/');
  mpz_class num, den(1);
  try {
    if (slash == std::string::npos) {
      num = mpz_class(s);
    } else {
      num = mpz_class(s.substr(0, slash));
      den = mpz_class(s.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw domain_error("malformed rational literal: " + text);
  }
  if (den == 0) throw domain_error("rational with zero denominator: " + text);
  return Rational(num, den);
}

mpz_class int_pow(const mpz_class& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace extremal
