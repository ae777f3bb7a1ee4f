#ifndef EXTREMAL_MONOMIAL_HPP
#define EXTREMAL_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace extremal {

enum class Ordering { less, equal, greater };

/// A monomial x1^w1 * ... * xn^wn, stored as its exponent vector.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);
  static Monomial unit(int n);
  static Monomial variable(int n, int var, int exp = 1);  // var is 0-based

  int dimension() const { return static_cast<int>(exps_.size()); }
  int exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const { return exps_; }
  int total_degree() const;
  bool is_unit() const;
  bool is_square_free() const;
  int max_exponent() const;

  Monomial times(const Monomial& o) const;
  /// Exact quotient this / d. Requires divides(d, *this).
  Monomial quotient(const Monomial& d) const;

  /// "1" for the unit, else factors like "x3^2*x5" in increasing variable
  /// index with 1-based indices.
  std::string str() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps_ != b.exps_; }
  /// Storage order only (plain lexicographic on exponent vectors); not a term
  /// order. Use compare() for term-order comparisons.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  std::vector<int> exps_;
};

/// A lexicographic term order given by a priority permutation of the
/// variables: priority[0] is the most significant variable (0-based).
class LexOrder {
 public:
  explicit LexOrder(std::vector<int> priority);
  static LexOrder standard(int n);
  static LexOrder from_one_based(const std::vector<int>& priority);

  int dimension() const { return static_cast<int>(priority_.size()); }
  const std::vector<int>& priority() const { return priority_; }
  std::vector<int> one_based() const;

  /// All n! lex orders in lexicographic order of their priority vectors.
  /// Throws guard_error when n exceeds the guard.
  static std::vector<LexOrder> all(int n, int guard = 8);

  /// "2,1" style, 1-based, most significant first.
  std::string str() const;

  friend bool operator==(const LexOrder& a, const LexOrder& b) { return a.priority_ == b.priority_; }
  friend bool operator!=(const LexOrder& a, const LexOrder& b) { return a.priority_ != b.priority_; }
  friend bool operator<(const LexOrder& a, const LexOrder& b) { return a.priority_ < b.priority_; }

 private:
  std::vector<int> priority_;
};

/// Term-order comparison: the most significant variable with differing
/// exponent decides. Total order with 1 minimal, compatible with
/// multiplication.
Ordering compare(const Monomial& a, const Monomial& b, const LexOrder& ord);
bool lex_less(const Monomial& a, const Monomial& b, const LexOrder& ord);

/// True iff a divides b, i.e. a_i <= b_i for every i.
bool divides(const Monomial& a, const Monomial& b);

}  // namespace extremal

#endif
