#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace kdknn {

using Coord = std::uint64_t;
using Distance = std::uint64_t;

/// A point in k-dimensional space with natural-number coordinates. The
/// dimensionality is the vector length.
using DataPoint = std::vector<Coord>;

/// Manhattan distance between two points of equal length.
///
/// Throws std::invalid_argument on a length mismatch and std::overflow_error
/// if the sum does not fit in Distance.
Distance sum_dist(const DataPoint& q, const DataPoint& p);

/// True iff p[i] <= q[i]. Throws std::out_of_range if i is not a valid index
/// of both points.
bool ith_leb(std::size_t i, const DataPoint& p, const DataPoint& q);

/// ith_leb curried on the axis, usable as a quickselect comparator.
class AxisLeq {
 public:
  explicit AxisLeq(std::size_t axis) : axis_(axis) {}

  bool operator()(const DataPoint& p, const DataPoint& q) const {
    return ith_leb(axis_, p, q);
  }

  std::size_t axis() const { return axis_; }

 private:
  std::size_t axis_;
};

/// Key function for neighbor queues: distance from a fixed query point.
class DistanceFrom {
 public:
  explicit DistanceFrom(DataPoint query) : query_(std::move(query)) {}

  Distance operator()(const DataPoint& p) const { return sum_dist(query_, p); }

  const DataPoint& query() const { return query_; }

 private:
  DataPoint query_;
};

}  // namespace kdknn
