#include "extremal/downshift.hpp"

#include <algorithm>
#include <map>

#include "extremal/errors.hpp"

namespace extremal {

std::set<int> section(const PointSet& v, const SectionKey& key) {
  const int n = v.dimension();
  if (key.axis < 0 || key.axis >= n) throw dimension_error("section axis out of range");
  if (static_cast<int>(key.fixed.size()) != n - 1)
    throw dimension_error("section key must fix n-1 coordinates");
  for (int c : key.fixed)
    if (c < 0 || c >= v.alphabet_size()) throw domain_error("section key value outside the grid");
  std::set<int> values;
  for (const Point& p : v.points()) {
    bool match = true;
    int j = 0;
    for (int i = 0; i < n && match; ++i) {
      if (i == key.axis) continue;
      if (p[static_cast<std::size_t>(i)] != key.fixed[static_cast<std::size_t>(j)]) match = false;
      ++j;
    }
    if (match) values.insert(p[static_cast<std::size_t>(key.axis)]);
  }
  return values;
}

PointSet downshift_i(const PointSet& v, int axis) {
  const int n = v.dimension();
  if (axis < 0 || axis >= n) throw dimension_error("downshift axis out of range");
  // Group points by the n-1 fixed coordinates; each group is one section.
  std::map<std::vector<int>, int> section_fill;
  std::vector<Point> out;
  out.reserve(v.size());
  // Points are sorted, so within a group the axis values ascend; assigning
  // 0,1,2,... in encounter order rewrites each section to an initial segment.
  for (const Point& p : v.points()) {
    std::vector<int> key;
    key.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i)
      if (i != axis) key.push_back(p[static_cast<std::size_t>(i)]);
    const int next = section_fill[key]++;
    Point q = p;
    q[static_cast<std::size_t>(axis)] = next;
    out.push_back(std::move(q));
  }
  return PointSet(n, v.alphabet_size(), std::move(out));
}

PointSet downshift_seq(const PointSet& v, std::span<const int> seq) {
  PointSet current = v;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) current = downshift_i(current, *it);
  return current;
}

MonomialSet sm_via_downshift(const PointSet& v, const LexOrder& ord) {
  const int n = v.dimension();
  if (ord.dimension() != n) throw dimension_error("lex order dimension differs from point set");
  // Theorem route: apply D along the most significant variable first, i.e.
  // compose D_{i_n,...,i_1}.
  std::vector<int> seq(ord.priority().rbegin(), ord.priority().rend());
  PointSet shifted = downshift_seq(v, seq);
  MonomialSet sm(n);
  for (const Point& p : shifted.points()) sm.insert(Monomial(p));
  return sm;
}

SetSystem downshift_family(const SetSystem& f, int element) {
  const int n = f.ground_size();
  if (element < 0 || element >= n) throw dimension_error("downshift element out of range");
  const std::uint32_t bit = 1u << element;
  std::vector<std::uint32_t> out;
  out.reserve(f.size());
  for (std::uint32_t s : f.sets()) {
    if ((s & bit) && f.contains(s & ~bit)) {
      out.push_back(s);  // blocked: the shifted copy is already present
    } else {
      out.push_back(s & ~bit);
    }
  }
  return SetSystem(n, std::move(out));
}

}  // namespace extremal
