#ifndef EXTREMAL_SET_SYSTEM_HPP
#define EXTREMAL_SET_SYSTEM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "extremal/point_set.hpp"

namespace extremal {

/// A family of subsets of [n], each stored as a bitmask (bit i = element i+1).
/// Identified with its characteristic-vector point set in {0,1}^n.
class SetSystem {
 public:
  explicit SetSystem(int n);
  SetSystem(int n, std::vector<std::uint32_t> sets);

  static SetSystem full_cube(int n);
  /// Requires k == 2.
  static SetSystem from_points(const PointSet& v);
  PointSet to_points() const;

  int ground_size() const { return n_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  bool contains(std::uint32_t mask) const;
  const std::vector<std::uint32_t>& sets() const { return sets_; }

  /// Each set as sorted 1-based indices; families sorted by (size, indices).
  std::vector<std::vector<int>> as_index_lists() const;

  friend bool operator==(const SetSystem& a, const SetSystem& b) {
    return a.n_ == b.n_ && a.sets_ == b.sets_;
  }
  friend bool operator!=(const SetSystem& a, const SetSystem& b) { return !(a == b); }

 private:
  int n_;
  std::vector<std::uint32_t> sets_;  // sorted, unique
};

std::string set_str(std::uint32_t mask);
std::vector<int> mask_to_indices(std::uint32_t mask);  // 1-based

}  // namespace extremal

#endif
