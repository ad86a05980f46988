#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "kdknn/metrics.hpp"

namespace kdknn {

/// A concrete bound, or nullopt for -inf (in `mins`) / +inf (in `maxs`).
using Bound = std::optional<Coord>;

/// Axis-aligned box with inclusive, possibly infinite bounds per dimension.
struct BoundingBox {
  std::vector<Bound> mins;
  std::vector<Bound> maxs;

  std::size_t dims() const { return mins.size(); }

  bool operator==(const BoundingBox&) const = default;
};

/// The box with every bound absent. Throws std::invalid_argument for k == 0.
BoundingBox unbounded_box(std::size_t k);

bool bb_contains(const BoundingBox& bb, const DataPoint& p);

/// Cuts `bb` at `value` along `axis`. Both halves include the cutting plane.
std::pair<BoundingBox, BoundingBox> bb_split(const BoundingBox& bb,
                                             std::size_t axis, Coord value);

/// The point of `bb` nearest to q under sum_dist: each coordinate is the
/// median of q[i], mins[i] and maxs[i].
DataPoint closest_edge_point(const DataPoint& q, const BoundingBox& bb);

}  // namespace kdknn
