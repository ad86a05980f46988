#pragma once

// Brute-force reference search and the predicates that define a correct
// K-nearest-neighbor answer. Nothing here touches the tree code.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "kdknn/metrics.hpp"

namespace kdknn {

/// Stable sort of `data` by distance to `query`, truncated to K elements.
std::vector<DataPoint> brute_force_knn(std::size_t K, const DataPoint& query,
                                       std::vector<DataPoint> data);

/// True iff key(a) <= key(b) for every a in l1 and b in l2.
template <typename T, typename KeyFn>
bool all_in_leb(const KeyFn& key, const std::vector<T>& l1,
                const std::vector<T>& l2) {
  if (l1.empty() || l2.empty()) return true;
  auto kmax = std::invoke(key, l1.front());
  for (const auto& a : l1) kmax = std::max(kmax, std::invoke(key, a));
  return std::all_of(l2.begin(), l2.end(),
                     [&](const T& b) { return kmax <= std::invoke(key, b); });
}

/// Multiset equality.
template <typename T>
bool is_permutation(std::vector<T> l1, std::vector<T> l2) {
  if (l1.size() != l2.size()) return false;
  std::sort(l1.begin(), l1.end());
  std::sort(l2.begin(), l2.end());
  return l1 == l2;
}

/// `from` minus `remove`, one occurrence per element of `remove`. Returns
/// false through `ok` if some element of `remove` has no match left.
std::vector<DataPoint> multiset_difference(const std::vector<DataPoint>& from,
                                           const std::vector<DataPoint>& remove,
                                           bool* ok = nullptr);

struct CheckReport {
  bool length_ok = false;
  bool subset_ok = false;
  bool separation_ok = false;
  bool distance_multiset_ok = false;
  std::string details;

  bool passed() const {
    return length_ok && subset_ok && separation_ok && distance_multiset_ok;
  }
};

/// Validates `result` as an answer to the K-nearest query for `query` over
/// `data`:
///  - it has min(K, |data|) points,
///  - it is a sub-multiset of data,
///  - no point left out of it is closer than a point in it,
///  - its distances are those of brute_force_knn.
CheckReport check_knn_result(std::size_t K, std::size_t k,
                             const std::vector<DataPoint>& data,
                             const DataPoint& query,
                             const std::vector<DataPoint>& result);

}  // namespace kdknn
