#ifndef EXTREMAL_DOWNSHIFT_HPP
#define EXTREMAL_DOWNSHIFT_HPP

#include <set>
#include <span>
#include <vector>

#include "extremal/monomial_set.hpp"
#include "extremal/point_set.hpp"
#include "extremal/set_system.hpp"

namespace extremal {

/// Identifies one axis-aligned line of the grid: the i-section at fixed
/// values of the other n-1 coordinates. `axis` is 0-based; `fixed` lists the
/// remaining coordinates in increasing coordinate order.
struct SectionKey {
  int axis;
  std::vector<int> fixed;
};

/// Values alpha such that inserting alpha at `axis` lands in V.
std::set<int> section(const PointSet& v, const SectionKey& key);

/// Downshift along one axis: every nonempty i-section of size m is replaced
/// by the initial segment {0,...,m-1}; all other coordinates are untouched.
/// Preserves cardinality and is idempotent per axis.
PointSet downshift_i(const PointSet& v, int axis);

/// Right-to-left composite D_{i1,...,il}(V) = D_{i1}(D_{i2}(...(D_{il}(V)))):
/// the LAST listed axis is applied FIRST. An empty sequence is the identity.
PointSet downshift_seq(const PointSet& v, std::span<const int> seq);

/// Standard monomials through the downshift route: for the lex order with
/// priority (i1,...,in), the composite D_{in,...,i1}(V) read as exponent
/// vectors. Agrees with sm_lex by construction of the theory; the test suite
/// checks the two routes against each other.
MonomialSet sm_via_downshift(const PointSet& v, const LexOrder& ord);

/// Set-system downshift by one element:
/// D_i(F) = {F\{i}} u {F : i in F, F\{i} in F}. `element` is 0-based.
/// Preserves cardinality and never enlarges the shattered family.
SetSystem downshift_family(const SetSystem& f, int element);

}  // namespace extremal

#endif
