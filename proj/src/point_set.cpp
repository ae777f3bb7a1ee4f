#include "extremal/point_set.hpp"

#include <algorithm>

#include "extremal/errors.hpp"

namespace extremal {

PointSet::PointSet(int n, int k) : n_(n), k_(k) {
  if (n < 1) throw dimension_error("point set dimension must be positive");
  if (k < 1) throw domain_error("alphabet size must be positive");
}

PointSet::PointSet(int n, int k, std::vector<Point> points, std::size_t* duplicates)
    : PointSet(n, k) {
  for (const Point& p : points) {
    if (static_cast<int>(p.size()) != n)
      throw dimension_error("point arity differs from declared dimension");
    for (int c : p)
      if (c < 0 || c >= k)
        throw domain_error("point coordinate outside {0,...,k-1}");
  }
  std::sort(points.begin(), points.end());
  const std::size_t before = points.size();
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (duplicates) *duplicates = before - points.size();
  points_ = std::move(points);
}

bool PointSet::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool PointSet::is_down_set() const {
  for (const Point& p : points_) {
    Point q = p;
    for (int i = 0; i < n_; ++i) {
      if (p[static_cast<std::size_t>(i)] == 0) continue;
      q[static_cast<std::size_t>(i)] -= 1;
      if (!contains(q)) return false;
      q[static_cast<std::size_t>(i)] += 1;
    }
  }
  return true;
}

bool PointSet::is_up_set() const {
  for (const Point& p : points_) {
    Point q = p;
    for (int i = 0; i < n_; ++i) {
      if (p[static_cast<std::size_t>(i)] == k_ - 1) continue;
      q[static_cast<std::size_t>(i)] += 1;
      if (!contains(q)) return false;
      q[static_cast<std::size_t>(i)] -= 1;
    }
  }
  return true;
}

std::string point_str(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

}  // namespace extremal
