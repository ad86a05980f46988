#include "kdknn/oracle.hpp"

#include <map>
#include <sstream>

namespace kdknn {
namespace {

std::string format_point(const DataPoint& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

std::vector<Distance> sorted_distances(const DataPoint& query,
                                       const std::vector<DataPoint>& pts) {
  std::vector<Distance> d;
  d.reserve(pts.size());
  for (const auto& p : pts) d.push_back(sum_dist(query, p));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::vector<DataPoint> brute_force_knn(std::size_t K, const DataPoint& query,
                                       std::vector<DataPoint> data) {
  std::vector<std::pair<Distance, std::size_t>> order;
  order.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    order.emplace_back(sum_dist(query, data[i]), i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  const std::size_t m = std::min(K, data.size());
  std::vector<DataPoint> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.push_back(std::move(data[order[i].second]));
  }
  return out;
}

std::vector<DataPoint> multiset_difference(const std::vector<DataPoint>& from,
                                           const std::vector<DataPoint>& remove,
                                           bool* ok) {
  std::map<DataPoint, std::size_t> pending;
  for (const auto& p : remove) ++pending[p];
  std::vector<DataPoint> out;
  for (const auto& p : from) {
    auto it = pending.find(p);
    if (it != pending.end() && it->second > 0) {
      --it->second;
    } else {
      out.push_back(p);
    }
  }
  if (ok) {
    *ok = std::all_of(pending.begin(), pending.end(),
                      [](const auto& kv) { return kv.second == 0; });
  }
  return out;
}

CheckReport check_knn_result(std::size_t K, std::size_t /*k*/,
                             const std::vector<DataPoint>& data,
                             const DataPoint& query,
                             const std::vector<DataPoint>& result) {
  CheckReport r;
  std::ostringstream why;

  const std::size_t want = std::min(K, data.size());
  r.length_ok = result.size() == want;
  if (!r.length_ok) {
    why << "length " << result.size() << ", expected " << want << "; ";
  }

  const auto leftover = multiset_difference(data, result, &r.subset_ok);
  if (!r.subset_ok) why << "result is not a sub-multiset of the data; ";

  const DistanceFrom dist(query);
  r.separation_ok = all_in_leb(dist, result, leftover);
  if (!r.separation_ok) {
    const auto far = std::max_element(
        result.begin(), result.end(),
        [&](const auto& a, const auto& b) { return dist(a) < dist(b); });
    const auto near = std::min_element(
        leftover.begin(), leftover.end(),
        [&](const auto& a, const auto& b) { return dist(a) < dist(b); });
    why << "left-out point " << format_point(*near) << " (distance "
        << dist(*near) << ") is closer than result point "
        << format_point(*far) << " (distance " << dist(*far) << "); ";
  }

  r.distance_multiset_ok =
      sorted_distances(query, result) ==
      sorted_distances(query, brute_force_knn(K, query, data));
  if (!r.distance_multiset_ok) {
    why << "distance multiset differs from brute force; ";
  }

  r.details = why.str();
  if (r.details.size() >= 2) r.details.resize(r.details.size() - 2);
  return r;
}

}  // namespace kdknn
