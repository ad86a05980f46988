#include "kdknn/kdtree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kdknn/quickselect.hpp"

namespace kdknn {

KdTree KdTree::node(std::size_t axis, DataPoint point, KdTree left,
                    KdTree right) {
  KdTree t;
  t.root_ = std::make_unique<Node>(
      Node{axis, std::move(point), std::move(left), std::move(right)});
  return t;
}

std::size_t KdTree::size() const {
  if (!root_) return 0;
  return 1 + root_->left.size() + root_->right.size();
}

std::size_t KdTree::height() const {
  if (!root_) return 0;
  return 1 + std::max(root_->left.height(), root_->right.height());
}

KdTree KdTree::clone() const {
  if (!root_) return {};
  return node(root_->axis, root_->point, root_->left.clone(),
              root_->right.clone());
}

std::size_t next_depth(std::size_t k, std::size_t d) { return (d + 1) % k; }

namespace {

KdTree build(std::size_t k, std::vector<DataPoint> data, std::size_t axis) {
  // Each partition is strictly smaller than `data`, so this terminates.
  auto split = median_partition(std::move(data), AxisLeq(axis));
  if (!split) return {};
  const std::size_t next = next_depth(k, axis);
  KdTree left = build(k, std::move(split->before), next);
  KdTree right = build(k, std::move(split->after), next);
  return KdTree::node(axis, std::move(split->pivot_value), std::move(left),
                      std::move(right));
}

void collect(const KdTree& tree, std::vector<DataPoint>& out) {
  const auto* n = tree.root();
  if (!n) return;
  out.push_back(n->point);
  collect(n->left, out);
  collect(n->right, out);
}

}  // namespace

KdTree build_kdtree(std::size_t k, std::vector<DataPoint> data) {
  if (k == 0) throw std::invalid_argument("build_kdtree: k must be positive");
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i].size() != k) {
      throw std::invalid_argument(
          "build_kdtree: point " + std::to_string(i) + " has " +
          std::to_string(data[i].size()) + " coordinates, expected " +
          std::to_string(k));
    }
  }
  return build(k, std::move(data), 0);
}

std::vector<DataPoint> contents(const KdTree& tree) {
  std::vector<DataPoint> out;
  collect(tree, out);
  return out;
}

bool kdtree_bounded(const KdTree& tree, const BoundingBox& bb) {
  const auto* n = tree.root();
  if (!n) return true;
  if (n->axis >= bb.dims() || n->point.size() != bb.dims()) return false;
  if (!bb_contains(bb, n->point)) return false;
  auto [lower, upper] = bb_split(bb, n->axis, n->point[n->axis]);
  return kdtree_bounded(n->left, lower) && kdtree_bounded(n->right, upper);
}

}  // namespace kdknn
