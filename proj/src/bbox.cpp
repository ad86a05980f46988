#include "kdknn/bbox.hpp"

#include <stdexcept>
#include <string>

namespace kdknn {
namespace {

void require_dims(const BoundingBox& bb, std::size_t k, const char* op) {
  if (bb.mins.size() != bb.maxs.size()) {
    throw std::invalid_argument(std::string(op) + ": malformed bounding box");
  }
  if (bb.dims() != k) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (box " +
                                std::to_string(bb.dims()) + ", point " +
                                std::to_string(k) + ")");
  }
}

}  // namespace

BoundingBox unbounded_box(std::size_t k) {
  if (k == 0) throw std::invalid_argument("unbounded_box: k must be positive");
  return BoundingBox{std::vector<Bound>(k), std::vector<Bound>(k)};
}

bool bb_contains(const BoundingBox& bb, const DataPoint& p) {
  require_dims(bb, p.size(), "bb_contains");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (bb.mins[i] && p[i] < *bb.mins[i]) return false;
    if (bb.maxs[i] && *bb.maxs[i] < p[i]) return false;
  }
  return true;
}

std::pair<BoundingBox, BoundingBox> bb_split(const BoundingBox& bb,
                                             std::size_t axis, Coord value) {
  if (bb.mins.size() != bb.maxs.size() || axis >= bb.dims()) {
    throw std::out_of_range("bb_split: axis " + std::to_string(axis) +
                            " out of range");
  }
  BoundingBox lower = bb;
  BoundingBox upper = bb;
  lower.maxs[axis] = value;
  upper.mins[axis] = value;
  return {std::move(lower), std::move(upper)};
}

DataPoint closest_edge_point(const DataPoint& q, const BoundingBox& bb) {
  require_dims(bb, q.size(), "closest_edge_point");
  // With min <= max, median(q, min, max) is q clamped into [min, max].
  DataPoint p = q;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (bb.mins[i] && p[i] < *bb.mins[i]) p[i] = *bb.mins[i];
    if (bb.maxs[i] && *bb.maxs[i] < p[i]) p[i] = *bb.maxs[i];
  }
  return p;
}

}  // namespace kdknn
