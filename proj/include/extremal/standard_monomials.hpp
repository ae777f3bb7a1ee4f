#ifndef EXTREMAL_STANDARD_MONOMIALS_HPP
#define EXTREMAL_STANDARD_MONOMIALS_HPP

#include <cstdint>
#include <vector>

#include "extremal/monomial.hpp"
#include "extremal/monomial_set.hpp"
#include "extremal/point_set.hpp"

namespace extremal {

inline constexpr int kDefaultFactorialGuard = 8;

/// Elementary-step counter for complexity checks. Callers own the counter;
/// the library never keeps global state.
struct OpCounter {
  std::uint64_t steps = 0;
};

/// Standard monomials of the vanishing ideal for one lex order.
struct SmResult {
  LexOrder order;
  MonomialSet monomials;
};

/// Lex standard monomials of I(V) by the sectioning recursion: recurse on the
/// least significant variable of `ord`, partition V by that coordinate into
/// sections keyed on the distinct values present, and keep x^(w,e) exactly
/// when the truncation w is standard for at least e+1 sections. Base case
/// n=1: exponents 0..|V|-1. Runs in O(n|V|k) elementary steps.
SmResult sm_lex(const PointSet& v, const LexOrder& ord, OpCounter* counter = nullptr);

/// Independent cross-check: enumerate the grid monomials (exponents < k) in
/// increasing `ord`, accept a monomial exactly when its evaluation vector
/// over V is linearly independent of the previously accepted ones (exact
/// integer row reduction, first-nonzero pivoting), and stop after |V|
/// acceptances.
SmResult sm_oracle(const PointSet& v, const LexOrder& ord);

/// sm_lex for each of the n! lex orders, in lexicographic order of the
/// priority vectors. Throws guard_error when n exceeds the guard.
std::vector<SmResult> sm_all_lex(const PointSet& v, int guard = kDefaultFactorialGuard);

/// Coordinatewise image of V under n injective maps {0,...,k-1} -> Z>=0,
/// maps[i][j] being the image of value j in coordinate i. The result's
/// alphabet size is 1 + the largest image value. Standard monomials are
/// invariant under such relabelings.
PointSet relabel(const PointSet& v, const std::vector<std::vector<int>>& maps);

}  // namespace extremal

#endif
