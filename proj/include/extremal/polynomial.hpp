#ifndef EXTREMAL_POLYNOMIAL_HPP
#define EXTREMAL_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extremal/monomial.hpp"
#include "extremal/point_set.hpp"
#include "extremal/rational.hpp"

namespace extremal {

/// Sparse polynomial over the exact rationals: a finite map from monomials to
/// nonzero coefficients. The empty map is the zero polynomial.
class Polynomial {
 public:
  explicit Polynomial(int n);
  static Polynomial constant(int n, const Rational& c);
  static Polynomial monomial(const Monomial& m, const Rational& c = Rational(1));
  static Polynomial variable(int n, int var);  // x_{var+1}
  static Polynomial from_terms(int n, const std::vector<std::pair<Monomial, Rational>>& terms);

  int dimension() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator*(const Monomial& m) const;
  Polynomial operator*(const Polynomial& o) const;

  /// Exact value at an integer point.
  Rational evaluate(const Point& v) const;

  /// Terms joined by " + " / " - ", sorted descending under `ord`;
  /// coefficients rendered as integers or "p/q". "0" for the zero polynomial.
  std::string str(const LexOrder& ord) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  int n_;
  std::map<Monomial, Rational> terms_;  // invariant: no zero coefficients
};

/// The order-maximal support monomial. Throws domain_error on the zero
/// polynomial.
Monomial leading_monomial(const Polynomial& p, const LexOrder& ord);

/// The dominating term of a degree-dominated polynomial: the unique support
/// monomial that every other support monomial properly divides, required to
/// carry coefficient exactly 1. Empty when no such term exists. Throws
/// domain_error on the zero polynomial.
std::optional<Monomial> dominating_term(const Polynomial& p);

}  // namespace extremal

#endif
