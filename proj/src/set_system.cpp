#include "extremal/set_system.hpp"

#include <algorithm>

#include "extremal/errors.hpp"

namespace extremal {

SetSystem::SetSystem(int n) : n_(n) {
  if (n < 1 || n > 31) throw dimension_error("set system ground size must be in [1,31]");
}

SetSystem::SetSystem(int n, std::vector<std::uint32_t> sets) : SetSystem(n) {
  const std::uint32_t limit = (n == 31) ? 0x7fffffffu : ((1u << n) - 1u);
  for (std::uint32_t s : sets)
    if (s > limit) throw domain_error("set contains an element outside the ground set");
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  sets_ = std::move(sets);
}

SetSystem SetSystem::full_cube(int n) {
  if (n > 20) throw guard_error("full cube too large");
  std::vector<std::uint32_t> sets(static_cast<std::size_t>(1) << n);
  for (std::size_t i = 0; i < sets.size(); ++i) sets[i] = static_cast<std::uint32_t>(i);
  return SetSystem(n, std::move(sets));
}

SetSystem SetSystem::from_points(const PointSet& v) {
  if (v.alphabet_size() != 2)
    throw domain_error("set system identification requires a k=2 point set");
  std::vector<std::uint32_t> sets;
  sets.reserve(v.size());
  for (const Point& p : v.points()) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i]) mask |= (1u << i);
    sets.push_back(mask);
  }
  return SetSystem(v.dimension(), std::move(sets));
}

PointSet SetSystem::to_points() const {
  std::vector<Point> pts;
  pts.reserve(sets_.size());
  for (std::uint32_t s : sets_) {
    Point p(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
      if (s & (1u << i)) p[static_cast<std::size_t>(i)] = 1;
    pts.push_back(std::move(p));
  }
  return PointSet(n_, 2, std::move(pts));
}

bool SetSystem::contains(std::uint32_t mask) const {
  return std::binary_search(sets_.begin(), sets_.end(), mask);
}

std::vector<std::vector<int>> SetSystem::as_index_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(sets_.size());
  for (std::uint32_t s : sets_) out.push_back(mask_to_indices(s));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::string set_str(std::uint32_t mask) {
  if (mask == 0) return "-";
  std::string out;
  for (int i : mask_to_indices(mask)) {
    if (!out.empty()) out += " ";
    out += std::to_string(i);
  }
  return out;
}

std::vector<int> mask_to_indices(std::uint32_t mask) {
  std::vector<int> idx;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) idx.push_back(i + 1);
  return idx;
}

}  // namespace extremal
