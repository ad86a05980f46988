#include "kdknn/knn.hpp"

#include <stdexcept>
#include <string>

namespace kdknn {
namespace {

void search(std::size_t K, const KdTree& tree, const BoundingBox& bb,
            const DataPoint& query, NeighborQueue& pq, SearchStats* stats) {
  const auto* n = tree.root();
  if (!n) return;

  if (auto top = pq.peek_max_key(); top && K <= pq.size() &&
                                    *top < sum_dist(query, closest_edge_point(query, bb))) {
    if (stats) ++stats->pruned;
    return;
  }

  insert_bounded(K, n->point, pq);
  if (stats) ++stats->visited;

  auto [lower, upper] = bb_split(bb, n->axis, n->point[n->axis]);
  if (ith_leb(n->axis, n->point, query)) {
    search(K, n->left, lower, query, pq, stats);
    search(K, n->right, upper, query, pq, stats);
  } else {
    search(K, n->right, upper, query, pq, stats);
    search(K, n->left, lower, query, pq, stats);
  }
}

void validate(std::size_t K, std::size_t k, const DataPoint& query) {
  if (K == 0) throw std::invalid_argument("knn_search: K must be positive");
  if (k == 0) throw std::invalid_argument("knn_search: k must be positive");
  if (query.size() != k) {
    throw std::invalid_argument("knn_search: query has " +
                                std::to_string(query.size()) +
                                " coordinates, expected " + std::to_string(k));
  }
}

}  // namespace

NeighborQueue knn(std::size_t K, std::size_t /*k*/, const KdTree& tree,
                  const BoundingBox& bb, const DataPoint& query,
                  NeighborQueue pq, SearchStats* stats) {
  search(K, tree, bb, query, pq, stats);
  return pq;
}

std::vector<DataPoint> knn_search(std::size_t K, std::size_t k,
                                  const KdTree& tree, const DataPoint& query,
                                  SearchStats* stats) {
  validate(K, k, query);
  NeighborQueue pq{DistanceFrom(query)};
  pq = knn(K, k, tree, unbounded_box(k), query, std::move(pq), stats);
  return pq_to_list(pq);
}

std::optional<DataPoint> nearest_neighbor(std::size_t k, const KdTree& tree,
                                          const DataPoint& query) {
  auto result = knn_search(1, k, tree, query);
  if (result.empty()) return std::nullopt;
  return std::move(result.front());
}

std::size_t visit_count(std::size_t K, std::size_t k, const KdTree& tree,
                        const DataPoint& query) {
  SearchStats stats;
  knn_search(K, k, tree, query, &stats);
  return stats.visited;
}

}  // namespace kdknn
