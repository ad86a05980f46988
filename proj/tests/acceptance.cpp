// Acceptance suite: one line per criterion, exit status 0 iff all pass.
//
// Every instance count, size range and time limit below is fixed; the
// generators are seeded so a failure is reproducible.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "kdknn/bbox.hpp"
#include "kdknn/cli.hpp"
#include "kdknn/kdt_format.hpp"
#include "kdknn/kdtree.hpp"
#include "kdknn/knn.hpp"
#include "kdknn/oracle.hpp"
#include "kdknn/point_io.hpp"
#include "kdknn/priqueue.hpp"
#include "kdknn/quickselect.hpp"
#include "support/generators.hpp"
#include "support/temp_dir.hpp"

using namespace kdknn;
using testing::Gen;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_ms;
  std::function<Outcome()> body;
};

// ---------------------------------------------------------------------------
// 1. Quickselect worked example.

Outcome quickselect_golden() {
  Outcome o;
  const auto r = quick_select(3, std::vector<unsigned>{15, 90, 32, 7, 86},
                              std::less_equal<unsigned>());
  const SelectResult<unsigned> want{{32, 7, 15}, 86, {90}};
  if (!r || !(*r == want)) o.fail("result differs from ([32;7;15], 86, [90])");
  if (o.ok) o.detail = "([32;7;15], 86, [90]) bit-exact";
  return o;
}

// ---------------------------------------------------------------------------
// 2. Quickselect correctness clauses on random lists with duplicates.

Outcome quickselect_properties() {
  Outcome o;
  Gen gen(0xA2);
  const auto le = std::less_equal<unsigned>();
  std::size_t selections = 0;
  for (int inst = 0; inst < 1000 && o.ok; ++inst) {
    const auto l = gen.values(gen.between(0, 200), 50);
    auto sorted = l;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < l.size(); ++k) {
      const auto r = quick_select(k, l, le);
      ++selections;
      std::ostringstream where;
      where << "instance " << inst << " rank " << k << ": ";
      if (!r) {
        o.fail(where.str() + "no result for a valid rank");
        break;
      }
      auto joined = r->before;
      joined.push_back(r->pivot_value);
      joined.insert(joined.end(), r->after.begin(), r->after.end());
      if (!is_permutation(joined, l)) o.fail(where.str() + "not a permutation");
      if (r->before.size() != k) o.fail(where.str() + "wrong position");
      for (auto x : r->before) {
        if (!le(x, r->pivot_value)) o.fail(where.str() + "before > pivot");
      }
      for (auto x : r->after) {
        if (!le(r->pivot_value, x)) o.fail(where.str() + "after < pivot");
      }
      if (r->pivot_value != sorted[k]) o.fail(where.str() + "pivot is not sorted[k]");
      if (!o.ok) break;
    }
    if (quick_select(l.size(), l, le)) o.fail("result for an out-of-range rank");
  }
  o.detail = o.ok ? std::to_string(selections) + " selections over 1000 lists"
                  : o.detail;
  return o;
}

// ---------------------------------------------------------------------------
// 3. Tree construction.

Outcome tree_construction() {
  Outcome o;
  const std::vector<DataPoint> fig1 = {{51, 75}, {25, 40}, {10, 30}, {1, 10},
                                       {35, 90}, {50, 50}, {60, 80}, {70, 70},
                                       {55, 1},  {55, 95}};
  const auto t = build_kdtree(2, fig1);
  if (!t.root() || t.root()->axis != 0 || t.root()->point != DataPoint{51, 75}) {
    o.fail("ten-point example root is not node 0 [51;75]");
  }
  Gen gen(0xA3);
  for (int inst = 0; inst < 500 && o.ok; ++inst) {
    const std::size_t k = gen.between(1, 4);
    const auto data = gen.points(gen.between(0, 200), k);
    const auto tree = build_kdtree(k, data);
    if (!is_permutation(contents(tree), data)) {
      o.fail("instance " + std::to_string(inst) + ": contents not a permutation");
    }
    if (!kdtree_bounded(tree, unbounded_box(k))) {
      o.fail("instance " + std::to_string(inst) + ": tree not bounded");
    }
  }
  if (o.ok) o.detail = "500 instances + example root";
  return o;
}

// ---------------------------------------------------------------------------
// 4. Closest enclosed point minimality.

// median(q, lo, hi) over naturals extended with -inf/+inf, computed as the
// literal median of three rather than as a clamp.
Coord median3(Coord q, const Bound& lo, const Bound& hi) {
  // Extended values: (tag, value) with tag -1 = -inf, 0 = finite, 1 = +inf.
  using Ext = std::pair<int, Coord>;
  std::vector<Ext> v{{0, q},
                     lo ? Ext{0, *lo} : Ext{-1, 0},
                     hi ? Ext{0, *hi} : Ext{1, 0}};
  std::sort(v.begin(), v.end());
  return v[1].second;  // the median is finite since q is
}

// Minimum sum_dist from q over all lattice points of [lo, hi].
Distance scan_min(const DataPoint& q, const DataPoint& lo, const DataPoint& hi) {
  DataPoint p = lo;
  Distance best = std::numeric_limits<Distance>::max();
  while (true) {
    best = std::min(best, sum_dist(q, p));
    std::size_t i = 0;
    for (; i < p.size(); ++i) {
      if (p[i] < hi[i]) {
        ++p[i];
        break;
      }
      p[i] = lo[i];
    }
    if (i == p.size()) return best;
  }
}

Outcome cep_minimality() {
  Outcome o;
  Gen gen(0xA4);
  std::size_t queries = 0;
  for (int inst = 0; inst < 200 && o.ok; ++inst) {
    const std::size_t dims = gen.between(1, 3);
    // Largest extent e with (e + 1)^dims <= 10^4 lattice points.
    const Coord max_extent = dims == 1 ? 9999 : dims == 2 ? 99 : 20;
    const auto bb = gen.finite_box(dims, 200, max_extent);
    DataPoint lo(dims), hi(dims);
    for (std::size_t i = 0; i < dims; ++i) {
      lo[i] = *bb.mins[i];
      hi[i] = *bb.maxs[i];
    }
    for (int j = 0; j < 4; ++j) {
      const auto q = gen.point(dims, 10400);
      const auto cep = closest_edge_point(q, bb);
      ++queries;
      if (!bb_contains(bb, cep)) o.fail("cep outside its box");
      if (sum_dist(q, cep) != scan_min(q, lo, hi)) {
        o.fail("finite box " + std::to_string(inst) + ": cep not minimal");
      }
      for (std::size_t i = 0; i < dims; ++i) {
        if (cep[i] != median3(q[i], bb.mins[i], bb.maxs[i])) {
          o.fail("cep differs from per-coordinate median");
        }
      }
    }
  }
  for (int inst = 0; inst < 50 && o.ok; ++inst) {
    const std::size_t dims = gen.between(1, 3);
    const Coord max_extent = dims == 1 ? 200 : dims == 2 ? 40 : 12;
    BoundingBox bb = gen.open_box(dims, 30, max_extent);
    if (std::all_of(bb.mins.begin(), bb.mins.end(), [](auto& b) { return b.has_value(); }) &&
        std::all_of(bb.maxs.begin(), bb.maxs.end(), [](auto& b) { return b.has_value(); })) {
      bb.maxs[0].reset();  // at least one absent bound
    }
    for (int j = 0; j < 4; ++j) {
      const auto q = gen.point(dims, 60);
      // A missing lower bound is 0 for naturals. A missing upper bound can be
      // cut off past max(q, lower): nothing beyond it is closer.
      DataPoint lo(dims), hi(dims);
      for (std::size_t i = 0; i < dims; ++i) {
        lo[i] = bb.mins[i].value_or(0);
        hi[i] = bb.maxs[i].value_or(std::max(q[i], lo[i]) + 1);
      }
      const auto cep = closest_edge_point(q, bb);
      ++queries;
      if (!bb_contains(bb, cep)) o.fail("cep outside its open box");
      if (sum_dist(q, cep) != scan_min(q, lo, hi)) {
        o.fail("open box " + std::to_string(inst) + ": cep not minimal");
      }
      for (std::size_t i = 0; i < dims; ++i) {
        if (cep[i] != median3(q[i], bb.mins[i], bb.maxs[i])) {
          o.fail("cep differs from per-coordinate median (open box)");
        }
      }
    }
  }
  if (o.ok) o.detail = "250 boxes, " + std::to_string(queries) + " queries";
  return o;
}

// ---------------------------------------------------------------------------
// 5. Priority queue against a naive multiset model.

Outcome priqueue_model() {
  using Item = std::pair<unsigned, unsigned>;  // (id, key)
  struct Key {
    unsigned operator()(const Item& e) const { return e.second; }
  };
  Outcome o;
  Gen gen(0xA5);
  for (int seq = 0; seq < 1000 && o.ok; ++seq) {
    MaxQueue<Item, Key> q;
    std::vector<unsigned> model;  // key multiset
    const std::size_t cap = gen.between(1, 16);
    const std::size_t len = gen.between(0, 300);
    const std::string where = "sequence " + std::to_string(seq) + ": ";
    for (std::size_t step = 0; step < len && o.ok; ++step) {
      const unsigned key = static_cast<unsigned>(gen.between(0, 25));
      switch (gen.between(0, 4)) {
        case 0:
          q.insert({static_cast<unsigned>(step), key});
          model.push_back(key);
          break;
        case 1:
        case 2: {
          if (model.size() > cap) break;  // insert_bounded precondition
          insert_bounded(cap, Item{static_cast<unsigned>(step), key}, q);
          model.push_back(key);
          std::sort(model.begin(), model.end());
          model.resize(std::min(model.size(), cap));
          if (q.size() > cap) o.fail(where + "insert_bounded exceeded K");
          break;
        }
        case 3: {
          const auto top = q.delete_max();
          if (top.has_value() == model.empty()) {
            o.fail(where + "delete_max presence mismatch");
            break;
          }
          if (!top) break;
          const auto it = std::max_element(model.begin(), model.end());
          if (top->second != *it) o.fail(where + "delete_max key is not the max");
          model.erase(it);
          break;
        }
        default: {
          const auto top = q.peek_max();
          if (top.has_value() == model.empty()) {
            o.fail(where + "peek_max presence mismatch");
          } else if (top && top->second !=
                                *std::max_element(model.begin(), model.end())) {
            o.fail(where + "peek_max key is not the max");
          }
        }
      }
      auto listed = pq_to_list(q);
      std::vector<unsigned> keys;
      for (const auto& e : listed) keys.push_back(e.second);
      if (!std::is_sorted(keys.begin(), keys.end())) o.fail(where + "pq_to_list unsorted");
      auto sorted_model = model;
      std::sort(sorted_model.begin(), sorted_model.end());
      if (keys != sorted_model) o.fail(where + "key multiset differs from model");
      if (q.size() != model.size()) o.fail(where + "size differs from model");
    }
  }
  if (o.ok) o.detail = "1000 sequences";
  return o;
}

// ---------------------------------------------------------------------------
// 6 and 7. End-to-end search correctness and the size clause, on the same
// instances.

struct SearchSweep {
  Outcome correctness;
  Outcome size;
};

SearchSweep search_sweep() {
  SearchSweep s;
  Gen gen(0xA6);
  for (int inst = 0; inst < 1000; ++inst) {
    const std::size_t k = gen.between(1, 4);
    const auto data = gen.points(gen.between(0, 200), k);
    const auto q = gen.point(k);
    const std::size_t K = gen.between(1, data.size() + 5);
    const auto result = knn_search(K, k, build_kdtree(k, data), q);
    const auto report = check_knn_result(K, k, data, q, result);
    const std::string where = "instance " + std::to_string(inst) + ": ";
    if (!report.passed()) s.correctness.fail(where + report.details);
    if (result.size() != std::min(K, data.size())) {
      s.size.fail(where + "length " + std::to_string(result.size()));
    }
  }
  if (s.correctness.ok) s.correctness.detail = "1000 instances, all four flags";
  if (s.size.ok) s.size.detail = "1000 instances";
  return s;
}

// ---------------------------------------------------------------------------
// 8. Pruning regression through the bench command.

// mean_visits measured for `bench --dims 2 --n 10000 --k 1` with the default
// seed and query count.
constexpr double kFrozenMeanVisits = 306.42;

Outcome bench_regression() {
  Outcome o;
  cli::BenchOptions opts;
  opts.dims = 2;
  opts.n = 10000;
  opts.k = 1;
  std::ostringstream out, err;
  const int code = cli::cmd_bench(opts, out, err);
  const std::string text = out.str();
  if (code != cli::kExitOk) o.fail("bench exit code " + std::to_string(code));
  const auto pos = text.find("mean_visits: ");
  if (pos == std::string::npos) {
    o.fail("no mean_visits line");
    return o;
  }
  const double mean = std::stod(text.substr(pos + 13));
  if (!(mean < static_cast<double>(opts.n))) o.fail("mean_visits not below n");
  if (mean > kFrozenMeanVisits) {
    o.fail("mean_visits " + std::to_string(mean) + " above frozen bound");
  }
  const std::string agreement =
      "agreement: " + std::to_string(opts.queries) + "/" + std::to_string(opts.queries);
  if (text.find(agreement) == std::string::npos) o.fail("oracle disagreement");
  if (o.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "mean_visits %.2f <= %.2f of n=%zu", mean,
                  kFrozenMeanVisits, opts.n);
    o.detail = buf;
  }
  return o;
}

// ---------------------------------------------------------------------------
// 9. CLI round trip.

Outcome cli_round_trip() {
  Outcome o;
  testing::TempDir dir;
  Gen gen(0xA9);
  for (int inst = 0; inst < 100 && o.ok; ++inst) {
    const std::size_t k = gen.between(1, 4);
    const auto data = gen.points(gen.between(0, 200), k);
    std::ostringstream csv;
    write_points(csv, data);
    const auto input = dir.write("points.csv", csv.str());
    const auto tree_path = dir.file("tree.kdt");
    const auto tree_path2 = dir.file("tree2.kdt");
    std::ostringstream sink, err;
    const std::string where = "instance " + std::to_string(inst) + ": ";

    if (cli::cmd_build({k, input, tree_path}, sink, err) != cli::kExitOk ||
        cli::cmd_build({k, input, tree_path2}, sink, err) != cli::kExitOk) {
      o.fail(where + "build failed: " + err.str());
      break;
    }
    const auto bytes = testing::slurp(tree_path);
    if (bytes != testing::slurp(tree_path2)) o.fail(where + "build not byte-deterministic");
    const auto loaded = parse_kdt(bytes);
    if (serialize_kdt(loaded.dims, loaded.tree) != bytes) {
      o.fail(where + "reserialization differs");
    }
    if (!is_permutation(contents(loaded.tree), data) ||
        !kdtree_bounded(loaded.tree, unbounded_box(k))) {
      o.fail(where + "loaded tree lost contents or bounds");
    }

    const auto in_memory = build_kdtree(k, data);
    for (int j = 0; j < 3; ++j) {
      const auto q = gen.point(k);
      const std::size_t K = gen.between(1, data.size() + 5);
      std::ostringstream expected;
      for (const auto& p : knn_search(K, k, in_memory, q)) {
        expected << format_point(p) << '\t' << sum_dist(q, p) << '\n';
      }
      std::ostringstream got;
      if (cli::cmd_query({tree_path, format_point(q), K}, got, err) != cli::kExitOk) {
        o.fail(where + "query failed: " + err.str());
      } else if (got.str() != expected.str()) {
        o.fail(where + "query output differs from in-memory search");
      }
    }
  }
  if (o.ok) o.detail = "100 instances, 300 queries";
  return o;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main() {
  // Criteria 6 and 7 share their instances; the sweep runs once, timed
  // under criterion 6.
  SearchSweep sweep;

  const std::vector<Criterion> criteria = {
      {"AC1", "quickselect worked example", 1, quickselect_golden},
      {"AC2", "quickselect selection properties", 10'000, quickselect_properties},
      {"AC3", "tree construction permutation + boundedness", 10'000, tree_construction},
      {"AC4", "closest enclosed point minimality", 30'000, cep_minimality},
      {"AC5", "priority queue model equivalence", 10'000, priqueue_model},
      {"AC6", "knn_search end-to-end correctness", 60'000,
       [&] {
         sweep = search_sweep();
         return sweep.correctness;
       }},
      {"AC7", "result length = min(K, n)", 60'000, [&] { return sweep.size; }},
      {"AC8", "pruning regression (bench dims 2, n 10000, K 1)", 60'000, bench_regression},
      {"AC9", "CLI build/serialize/query round trip", 10'000, cli_round_trip},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double ms = ms_since(t0);
    if (o.ok && ms >= c.limit_ms) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "took %.3f ms, limit %.0f ms", ms, c.limit_ms);
      o.fail(buf);
    }
    if (!o.ok) ++failed;
    std::printf("[%s] %s %s (%.3f ms, limit %.0f ms): %s\n", o.ok ? "PASS" : "FAIL",
                c.id, c.title, ms, c.limit_ms, o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
