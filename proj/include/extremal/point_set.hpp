#ifndef EXTREMAL_POINT_SET_HPP
#define EXTREMAL_POINT_SET_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace extremal {

/// A point of the grid {0,...,k-1}^n.
using Point = std::vector<int>;

/// A finite duplicate-free set of integer points inside {0,...,k-1}^n.
/// Points are kept sorted; k is an explicit part of the value, never
/// inferred from the data.
class PointSet {
 public:
  PointSet(int n, int k);
  /// Validates every coordinate against [0, k), sorts and deduplicates.
  /// When `duplicates` is non-null it receives the number of dropped rows.
  PointSet(int n, int k, std::vector<Point> points, std::size_t* duplicates = nullptr);

  int dimension() const { return n_; }
  int alphabet_size() const { return k_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  bool contains(const Point& p) const;

  /// Componentwise down-set: v in V and w <= v imply w in V.
  bool is_down_set() const;
  /// Componentwise up-set within the grid {0,...,k-1}^n.
  bool is_up_set() const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.points_ == b.points_;
  }
  friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }

 private:
  int n_;
  int k_;
  std::vector<Point> points_;  // sorted, unique
};

std::string point_str(const Point& p);

}  // namespace extremal

#endif
