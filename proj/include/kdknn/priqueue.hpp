#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace kdknn {

/// Max-priority queue over elements of type T ordered by `KeyFn(T)`.
///
/// Binary heap of (key, element) pairs; keys are computed once on insert.
/// Only the multiset of stored elements is observable: which of several
/// maximum-key elements peek_max/delete_max report is unspecified.
template <typename T, typename KeyFn>
class MaxQueue {
 public:
  using key_type = std::invoke_result_t<const KeyFn&, const T&>;

  explicit MaxQueue(KeyFn key = KeyFn()) : key_(std::move(key)) {}

  void insert(T e) {
    key_type k = std::invoke(key_, e);
    heap_.emplace_back(std::move(k), std::move(e));
    std::push_heap(heap_.begin(), heap_.end(), KeyLess{});
  }

  std::optional<T> peek_max() const {
    if (heap_.empty()) return std::nullopt;
    return heap_.front().second;
  }

  std::optional<key_type> peek_max_key() const {
    if (heap_.empty()) return std::nullopt;
    return heap_.front().first;
  }

  std::optional<T> delete_max() {
    if (heap_.empty()) return std::nullopt;
    std::pop_heap(heap_.begin(), heap_.end(), KeyLess{});
    T top = std::move(heap_.back().second);
    heap_.pop_back();
    return top;
  }

  std::size_t size() const { return heap_.size(); }
  bool empty() const { return heap_.empty(); }

  /// Elements in non-decreasing key order.
  std::vector<T> to_list() const {
    auto entries = heap_;
    std::sort_heap(entries.begin(), entries.end(), KeyLess{});
    std::vector<T> out;
    out.reserve(entries.size());
    for (auto& [k, e] : entries) out.push_back(std::move(e));
    return out;
  }

  const KeyFn& key_fn() const { return key_; }

 private:
  struct KeyLess {
    bool operator()(const std::pair<key_type, T>& a,
                    const std::pair<key_type, T>& b) const {
      return a.first < b.first;
    }
  };

  std::vector<std::pair<key_type, T>> heap_;
  KeyFn key_;
};

/// Inserts `e`, then drops one maximum-key element if the queue now holds
/// more than `capacity` elements. Keeps the `capacity` smallest keys seen.
template <typename T, typename KeyFn>
void insert_bounded(std::size_t capacity, T e, MaxQueue<T, KeyFn>& pq) {
  pq.insert(std::move(e));
  if (capacity < pq.size()) {
    if (!pq.delete_max()) {
      throw std::logic_error("insert_bounded: delete_max failed on a non-empty queue");
    }
  }
}

template <typename T, typename KeyFn>
std::vector<T> pq_to_list(const MaxQueue<T, KeyFn>& pq) {
  return pq.to_list();
}

}  // namespace kdknn
