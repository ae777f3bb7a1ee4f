#ifndef EXTREMAL_MONOMIAL_SET_HPP
#define EXTREMAL_MONOMIAL_SET_HPP

#include <set>
#include <string>
#include <vector>

#include "extremal/monomial.hpp"

namespace extremal {

/// A finite set of monomials of a common ambient dimension.
class MonomialSet {
 public:
  explicit MonomialSet(int n);
  MonomialSet(int n, std::set<Monomial> elements);

  int dimension() const { return n_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(const Monomial& m) const { return elems_.count(m) > 0; }
  void insert(const Monomial& m);
  const std::set<Monomial>& elements() const { return elems_; }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  /// Closed downward under divisibility.
  bool is_down_set() const;
  /// Largest exponent appearing in any element (0 for the empty set).
  int max_exponent() const;

  /// Renderings sorted ascending under `ord`.
  std::vector<std::string> to_strings(const LexOrder& ord) const;

  friend bool operator==(const MonomialSet& a, const MonomialSet& b) {
    return a.n_ == b.n_ && a.elems_ == b.elems_;
  }
  friend bool operator!=(const MonomialSet& a, const MonomialSet& b) { return !(a == b); }

 private:
  int n_;
  std::set<Monomial> elems_;
};

}  // namespace extremal

#endif
