#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "henon/core.hpp"

namespace henon {

/// Uniform hash grid over R^4 = C^2 for fixed-radius neighbour queries.
/// Queries with radius <= cell visit the 3^4 surrounding cells.
class CloudIndex {
 public:
  explicit CloudIndex(double cell);

  double cell() const { return cell_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<C2Point>& points() const { return points_; }
  const C2Point& operator[](std::size_t i) const { return points_[i]; }

  int add(const C2Point& p);

  /// Nearest stored point with distance < r (ties to the lower index), or -1.
  int nearest_within(const C2Point& q, double r) const;
  /// Some stored point with distance < r (first in scan order), or -1.
  int first_within(const C2Point& q, double r) const;
  bool any_within(const C2Point& q, double r) const { return first_within(q, r) >= 0; }
  /// All stored indices with distance < r, ascending.
  std::vector<int> all_within(const C2Point& q, double r) const;

 private:
  std::uint64_t key(const std::int64_t c[4]) const;
  void cell_of(const C2Point& p, std::int64_t c[4]) const;
  template <typename F>
  void visit(const C2Point& q, F&& f) const;

  double cell_;
  std::vector<C2Point> points_;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

}  // namespace henon
