#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "kdknn/bbox.hpp"
#include "kdknn/metrics.hpp"

namespace kdknn {

/// An immutable k-d tree: either empty, or a node holding a split axis, a
/// point, and two subtrees. Move-only; use clone() for a deep copy.
class KdTree {
 public:
  struct Node;

  KdTree() = default;  // the empty tree
  KdTree(KdTree&&) noexcept = default;
  KdTree& operator=(KdTree&&) noexcept = default;
  ~KdTree();

  static KdTree node(std::size_t axis, DataPoint point, KdTree left,
                     KdTree right);

  bool empty() const { return root_ == nullptr; }
  const Node* root() const { return root_.get(); }

  /// Number of nodes.
  std::size_t size() const;
  /// Number of levels; 0 for the empty tree.
  std::size_t height() const;

  KdTree clone() const;

 private:
  std::unique_ptr<Node> root_;
};

struct KdTree::Node {
  std::size_t axis;
  DataPoint point;
  KdTree left;
  KdTree right;
};

inline KdTree::~KdTree() = default;

/// (d + 1) mod k. Requires k > 0 and d < k.
std::size_t next_depth(std::size_t k, std::size_t d);

/// Median-split construction. The root splits on axis 0 and children cycle
/// through the axes; each node holds the rank floor(n/2) point of its data
/// on its axis, with the lower partition on the left.
///
/// Throws std::invalid_argument if k == 0 or a point does not have k
/// coordinates.
KdTree build_kdtree(std::size_t k, std::vector<DataPoint> data);

/// All stored points in pre-order (node, left, right).
std::vector<DataPoint> contents(const KdTree& tree);

/// True iff every node lies in the box obtained by splitting `bb` along the
/// path from the root.
bool kdtree_bounded(const KdTree& tree, const BoundingBox& bb);

}  // namespace kdknn
