#pragma once

// Functional k-th smallest selection (Hoare's FIND) that also returns the
// partitions around the selected element.
//
// The pivot is always the head of the list and the three-way partition keeps
// the input order, so results are fully determined by the input sequence.

#include <cstddef>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

namespace kdknn {

template <typename T>
struct SelectResult {
  std::vector<T> before;  // exactly k elements, each <= pivot_value
  T pivot_value;
  std::vector<T> after;   // each >= pivot_value

  bool operator==(const SelectResult&) const = default;
};

template <typename T>
struct ThreeWayPartition {
  std::vector<T> smaller;
  std::vector<T> equal;
  std::vector<T> larger;
};

/// Splits `rest` into elements strictly below, equivalent to, and strictly
/// above `pivot` under the preorder `le`. Each part keeps the order of `rest`.
template <typename T, typename Le>
ThreeWayPartition<T> partition_sm_eq_lg(const T& pivot, std::vector<T> rest,
                                        const Le& le) {
  ThreeWayPartition<T> out;
  for (auto& x : rest) {
    const bool x_le_p = le(x, pivot);
    const bool p_le_x = le(pivot, x);
    if (x_le_p && !p_le_x) {
      out.smaller.push_back(std::move(x));
    } else if (x_le_p && p_le_x) {
      out.equal.push_back(std::move(x));
    } else {
      out.larger.push_back(std::move(x));
    }
  }
  return out;
}

/// Selects the element of rank k (0 = smallest) under `le`. Returns nullopt
/// when k >= l.size().
///
/// The descent into the smaller or larger partition is a loop rather than a
/// recursion; the pieces that the recursive formulation would concatenate on
/// the way back up are stacked and glued innermost-first, which yields the
/// same element order.
template <typename T, typename Le>
std::optional<SelectResult<T>> quick_select(std::size_t k, std::vector<T> l,
                                            const Le& le) {
  if (k >= l.size()) return std::nullopt;

  std::vector<std::vector<T>> prefixes;  // prepended to `before`, outermost first
  std::vector<std::vector<T>> suffixes;  // appended to `after`, outermost first

  while (true) {
    // k < l.size() holds on every iteration, so l is non-empty.
    T pivot = std::move(l.front());
    std::vector<T> rest(std::make_move_iterator(l.begin() + 1),
                        std::make_move_iterator(l.end()));
    auto [sm, eq, lg] = partition_sm_eq_lg(pivot, std::move(rest), le);

    if (k < sm.size()) {
      std::vector<T> tail;
      tail.reserve(1 + eq.size() + lg.size());
      tail.push_back(std::move(pivot));
      std::move(eq.begin(), eq.end(), std::back_inserter(tail));
      std::move(lg.begin(), lg.end(), std::back_inserter(tail));
      suffixes.push_back(std::move(tail));
      l = std::move(sm);
    } else if (sm.size() + eq.size() < k) {
      k -= sm.size() + eq.size() + 1;
      std::vector<T> head = std::move(sm);
      head.push_back(std::move(pivot));
      std::move(eq.begin(), eq.end(), std::back_inserter(head));
      prefixes.push_back(std::move(head));
      l = std::move(lg);
    } else {
      const std::size_t split = k - sm.size();
      SelectResult<T> res{std::move(sm), std::move(pivot), {}};
      std::move(eq.begin(), eq.begin() + split, std::back_inserter(res.before));
      std::move(eq.begin() + split, eq.end(), std::back_inserter(res.after));
      std::move(lg.begin(), lg.end(), std::back_inserter(res.after));

      for (auto it = prefixes.rbegin(); it != prefixes.rend(); ++it) {
        std::move(it->begin(), it->end(), std::back_inserter(res.before));
      }
      for (auto it = suffixes.rbegin(); it != suffixes.rend(); ++it) {
        std::move(it->begin(), it->end(), std::back_inserter(res.after));
      }
      return res;
    }
  }
}

/// quick_select at rank floor(n/2): the upper median for even n.
template <typename T, typename Le>
std::optional<SelectResult<T>> median_partition(std::vector<T> l,
                                                const Le& le) {
  const std::size_t rank = l.size() / 2;
  return quick_select(rank, std::move(l), le);
}

}  // namespace kdknn
