#ifndef EXTREMAL_SHATTERING_HPP
#define EXTREMAL_SHATTERING_HPP

#include <cstdint>
#include <vector>

#include "extremal/point_set.hpp"
#include "extremal/set_system.hpp"
#include "extremal/standard_monomials.hpp"

namespace extremal {

/// Family of shattered sets with its summary statistics.
struct ShatterReport {
  std::vector<std::uint32_t> shattered;  // sorted masks; downward closed
  int vc_dim = -1;                       // -1 when nothing is shattered
  long long extremal_gap = 0;            // |Sh| - |input family|; may be
                                         // negative for k >= 3 point sets
};

/// True iff every one of the k^|S| value assignments on S is realized by the
/// restriction of some point. S is a bitmask over the coordinates. The empty
/// set is shattered exactly when V is nonempty.
bool shatters(const PointSet& v, std::uint32_t s);

/// Sh(V) by testing all 2^n subsets. Guarded against large n.
ShatterReport shattered_family(const PointSet& v, int guard_n = 20);

/// Sauer-Shelah equality |Sh(F)| = |F|.
bool is_s_extremal(const SetSystem& f);

/// Diagnostic identity: recomputes Sh(F) from the definition and as the
/// union of sm_lex over all n! lex orders (square-free monomials read as
/// sets). Always true for a correct implementation; false flags a bug.
bool sh_equals_sm_union(const SetSystem& f, int guard = kDefaultFactorialGuard);

}  // namespace extremal

#endif
