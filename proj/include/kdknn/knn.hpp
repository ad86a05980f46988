#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kdknn/bbox.hpp"
#include "kdknn/kdtree.hpp"
#include "kdknn/metrics.hpp"
#include "kdknn/priqueue.hpp"

namespace kdknn {

/// Candidate queue for a search: points keyed by distance to the query.
using NeighborQueue = MaxQueue<DataPoint, DistanceFrom>;

struct SearchStats {
  std::size_t visited = 0;  // nodes inserted into the queue (not pruned)
  std::size_t pruned = 0;   // subtrees skipped by the bounding-box test
};

/// Branch-and-bound K-nearest-neighbor step over `tree`, whose points are
/// assumed to lie inside `bb`. Returns `pq` with the tree's points merged in
/// under capacity K.
///
/// A subtree is skipped when the queue is full and its worst candidate is
/// strictly closer than the nearest point of the subtree's box. Otherwise the
/// node is inserted and both children are searched: the lower child first
/// when node.point[axis] <= query[axis], the upper child first otherwise.
///
/// Preconditions (unchecked): kdtree_bounded(tree, bb), pq.size() <= K,
/// K >= 1, and pq's key is sum_dist to `query`.
NeighborQueue knn(std::size_t K, std::size_t k, const KdTree& tree,
                  const BoundingBox& bb, const DataPoint& query,
                  NeighborQueue pq, SearchStats* stats = nullptr);

/// The K points of `tree` nearest to `query`, sorted by non-decreasing
/// distance. Fewer than K only if the tree holds fewer points.
///
/// Throws std::invalid_argument if K == 0, k == 0 or query.size() != k.
std::vector<DataPoint> knn_search(std::size_t K, std::size_t k,
                                  const KdTree& tree, const DataPoint& query,
                                  SearchStats* stats = nullptr);

/// knn_search with K = 1.
std::optional<DataPoint> nearest_neighbor(std::size_t k, const KdTree& tree,
                                          const DataPoint& query);

/// Nodes visited without pruning by knn_search(K, k, tree, query).
std::size_t visit_count(std::size_t K, std::size_t k, const KdTree& tree,
                        const DataPoint& query);

}  // namespace kdknn
