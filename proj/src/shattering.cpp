#include "extremal/shattering.hpp"

#include <algorithm>
#include <set>

#include "extremal/errors.hpp"

namespace extremal {

bool shatters(const PointSet& v, std::uint32_t s) {
  const int n = v.dimension();
  if (n < 31 && (s >> n) != 0) throw domain_error("shattered-set candidate outside [n]");
  if (v.empty()) return false;

  std::vector<int> coords;
  for (int i = 0; i < n; ++i)
    if (s & (1u << i)) coords.push_back(i);
  if (coords.empty()) return true;

  const int k = v.alphabet_size();
  std::uint64_t needed = 1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    needed *= static_cast<std::uint64_t>(k);
    if (needed > v.size()) return false;  // fewer points than assignments
  }

  std::set<std::vector<int>> realized;
  for (const Point& p : v.points()) {
    std::vector<int> r;
    r.reserve(coords.size());
    for (int c : coords) r.push_back(p[static_cast<std::size_t>(c)]);
    realized.insert(std::move(r));
  }
  // Walk the assignments in odometer order, failing at the first one missing.
  std::vector<int> assign(coords.size(), 0);
  while (true) {
    if (realized.count(assign) == 0) return false;
    std::size_t j = coords.size();
    while (j > 0 && assign[j - 1] == k - 1) assign[--j] = 0;
    if (j == 0) return true;
    ++assign[j - 1];
  }
}

ShatterReport shattered_family(const PointSet& v, int guard_n) {
  const int n = v.dimension();
  if (n > guard_n)
    throw guard_error("shattered family enumeration guard exceeded: n=" + std::to_string(n));
  ShatterReport report;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (shatters(v, s)) {
      report.shattered.push_back(s);
      report.vc_dim = std::max(report.vc_dim, static_cast<int>(__builtin_popcount(s)));
    }
  }
  report.extremal_gap =
      static_cast<long long>(report.shattered.size()) - static_cast<long long>(v.size());
  return report;
}

bool is_s_extremal(const SetSystem& f) {
  if (f.empty()) return true;
  ShatterReport report = shattered_family(f.to_points());
  return report.shattered.size() == f.size();
}

bool sh_equals_sm_union(const SetSystem& f, int guard) {
  const int n = f.ground_size();
  std::vector<std::uint32_t> by_definition;
  if (!f.empty()) by_definition = shattered_family(f.to_points()).shattered;

  std::set<std::uint32_t> via_sm;
  if (!f.empty()) {
    const PointSet v = f.to_points();
    for (const SmResult& r : sm_all_lex(v, guard)) {
      for (const Monomial& m : r.monomials) {
        std::uint32_t mask = 0;
        for (int i = 0; i < n; ++i)
          if (m.exponent(i)) mask |= (1u << i);
        via_sm.insert(mask);
      }
    }
  }
  return by_definition == std::vector<std::uint32_t>(via_sm.begin(), via_sm.end());
}

}  // namespace extremal
