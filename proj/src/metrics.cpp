#include "kdknn/metrics.hpp"

#include <stdexcept>
#include <string>

namespace kdknn {

Distance sum_dist(const DataPoint& q, const DataPoint& p) {
  if (q.size() != p.size()) {
    throw std::invalid_argument("sum_dist: dimension mismatch (" +
                                std::to_string(q.size()) + " vs " +
                                std::to_string(p.size()) + ")");
  }
  Distance total = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Distance d = q[i] > p[i] ? q[i] - p[i] : p[i] - q[i];
    if (__builtin_add_overflow(total, d, &total)) {
      throw std::overflow_error("sum_dist: distance overflows 64 bits");
    }
  }
  return total;
}

bool ith_leb(std::size_t i, const DataPoint& p, const DataPoint& q) {
  if (i >= p.size() || i >= q.size()) {
    throw std::out_of_range("ith_leb: axis " + std::to_string(i) +
                            " out of range");
  }
  return p[i] <= q[i];
}

}  // namespace kdknn
