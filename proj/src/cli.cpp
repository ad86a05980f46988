#include "kdknn/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "kdknn/error.hpp"
#include "kdknn/kdt_format.hpp"
#include "kdknn/kdtree.hpp"
#include "kdknn/knn.hpp"
#include "kdknn/oracle.hpp"
#include "kdknn/point_io.hpp"

namespace kdknn::cli {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::vector<Distance> distances(const DataPoint& q,
                                const std::vector<DataPoint>& pts) {
  std::vector<Distance> d;
  for (const auto& p : pts) d.push_back(sum_dist(q, p));
  std::sort(d.begin(), d.end());
  return d;
}

std::string join(const std::vector<Distance>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

void require_positive(std::size_t v, const char* what) {
  if (v == 0) throw InputError(std::string(what) + " must be at least 1");
}

// Runs `body`, mapping input and argument errors to kExitUsage.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace

int cmd_build(const BuildOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_positive(opts.dims, "--dims");
    auto points = read_point_file(opts.input, opts.dims);
    const KdTree tree = build_kdtree(opts.dims, std::move(points));
    std::ofstream file(opts.output, std::ios::binary);
    if (!file) throw InputError("cannot write '" + opts.output + "'");
    write_kdt(file, opts.dims, tree);
    file.close();
    if (!file) throw InputError("failed writing '" + opts.output + "'");
    out << "nodes: " << tree.size() << '\n';
    return int{kExitOk};
  });
}

int cmd_query(const QueryOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_positive(opts.k, "--k");
    std::ifstream file(opts.tree, std::ios::binary);
    if (!file) throw InputError("cannot open '" + opts.tree + "'");
    const TreeFile tf = read_kdt(file);
    const DataPoint query = parse_point(opts.point);
    if (query.size() != tf.dims) {
      throw InputError("query point has " + std::to_string(query.size()) +
                       " coordinates but the tree is " +
                       std::to_string(tf.dims) + "-dimensional");
    }
    for (const auto& p : knn_search(opts.k, tf.dims, tf.tree, query)) {
      out << format_point(p) << '\t' << sum_dist(query, p) << '\n';
    }
    return int{kExitOk};
  });
}

int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_positive(opts.dims, "--dims");
    require_positive(opts.k, "--k");
    const auto data = read_point_file(opts.input, opts.dims);
    const auto queries = read_point_file(opts.queries, opts.dims);
    const KdTree tree = build_kdtree(opts.dims, data);

    std::size_t passed = 0;
    for (std::size_t i = 0; i < queries.size(); ++i) {
      const auto result = knn_search(opts.k, opts.dims, tree, queries[i]);
      const auto report =
          check_knn_result(opts.k, opts.dims, data, queries[i], result);
      out << "query " << i << " (" << format_point(queries[i]) << "): ";
      if (report.passed()) {
        ++passed;
        out << "pass\n";
      } else {
        out << "FAIL " << report.details << '\n';
      }
    }
    out << "summary: " << queries.size() << " queries, " << passed
        << " passed, " << queries.size() - passed << " failed\n";
    return passed == queries.size() ? int{kExitOk} : int{kExitDisagreement};
  });
}

std::vector<DataPoint> bench_points(std::mt19937_64& rng, std::size_t count,
                                    std::size_t dims) {
  std::vector<DataPoint> pts(count, DataPoint(dims));
  for (auto& p : pts) {
    for (auto& c : p) c = rng() % kBenchCoordRange;
  }
  return pts;
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_positive(opts.dims, "--dims");
    require_positive(opts.n, "--n");
    require_positive(opts.k, "--k");

    std::mt19937_64 rng(opts.seed);
    auto data = bench_points(rng, opts.n, opts.dims);
    const auto queries = bench_points(rng, opts.queries, opts.dims);

    out << "bench: dims=" << opts.dims << " n=" << opts.n << " k=" << opts.k
        << " queries=" << opts.queries << '\n';
    out << "prng: mt19937_64 seed=" << opts.seed << '\n';

    auto t0 = Clock::now();
    const KdTree tree = build_kdtree(opts.dims, data);
    const double build_ms = elapsed_ms(t0);

    double tree_ms = 0;
    double brute_ms = 0;
    std::size_t total_visits = 0;
    std::size_t max_visits = 0;
    std::size_t agree = 0;
    std::ostringstream failures;
    for (std::size_t i = 0; i < queries.size(); ++i) {
      SearchStats stats;
      t0 = Clock::now();
      const auto found = knn_search(opts.k, opts.dims, tree, queries[i], &stats);
      tree_ms += elapsed_ms(t0);
      t0 = Clock::now();
      const auto expected = brute_force_knn(opts.k, queries[i], data);
      brute_ms += elapsed_ms(t0);

      total_visits += stats.visited;
      max_visits = std::max(max_visits, stats.visited);
      const auto got_d = distances(queries[i], found);
      const auto want_d = distances(queries[i], expected);
      if (got_d == want_d) {
        ++agree;
      } else {
        failures << "disagreement: query " << i << " ("
                 << format_point(queries[i]) << ") tree distances [" << join(got_d)
                 << "] brute force [" << join(want_d) << "]\n";
      }
    }

    const double nq = opts.queries ? static_cast<double>(opts.queries) : 1.0;
    out << "mean_visits: " << fixed2(static_cast<double>(total_visits) / nq) << '\n';
    out << "max_visits: " << max_visits << '\n';
    out << "mean_nodes: " << tree.size() << '\n';
    out << "agreement: " << agree << '/' << queries.size() << '\n';
    out << failures.str();
    out << "time: build_ms=" << fixed2(build_ms) << '\n';
    out << "time: tree_search_ms=" << fixed2(tree_ms) << '\n';
    out << "time: brute_force_ms=" << fixed2(brute_ms) << '\n';
    if (agree != queries.size()) {
      out << "reproduce: bench --dims " << opts.dims << " --n " << opts.n
          << " --k " << opts.k << " --queries " << opts.queries << " --seed "
          << opts.seed << '\n';
      return int{kExitDisagreement};
    }
    return int{kExitOk};
  });
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"k-d tree construction and K-nearest-neighbor search"};
  app.name("kdknn");
  app.require_subcommand(1);

  BuildOptions build;
  auto* b = app.add_subcommand("build", "Build a tree file from a point file");
  b->add_option("--dims", build.dims, "Dimensionality")->required();
  b->add_option("--input", build.input, "Point file")->required();
  b->add_option("--output", build.output, "Tree file to write")->required();

  QueryOptions query;
  auto* q = app.add_subcommand("query", "K nearest points to a query point");
  q->add_option("--tree", query.tree, "Tree file")->required();
  q->add_option("--point", query.point, "Comma-separated coordinates")->required();
  q->add_option("--k", query.k, "Number of neighbors")->required();

  CheckOptions check;
  auto* c = app.add_subcommand("check", "Validate searches against brute force");
  c->add_option("--dims", check.dims, "Dimensionality")->required();
  c->add_option("--input", check.input, "Point file")->required();
  c->add_option("--queries", check.queries, "Query point file")->required();
  c->add_option("--k", check.k, "Number of neighbors")->required();

  BenchOptions bench;
  auto* m = app.add_subcommand("bench", "Pruning benchmark on random points");
  m->add_option("--dims", bench.dims, "Dimensionality")->required();
  m->add_option("--n", bench.n, "Number of data points")->required();
  m->add_option("--k", bench.k, "Number of neighbors")->required();
  m->add_option("--queries", bench.queries, "Number of query points")
      ->capture_default_str();
  m->add_option("--seed", bench.seed, "PRNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kExitOk} : int{kExitUsage};
  }

  if (b->parsed()) return cmd_build(build, out, err);
  if (q->parsed()) return cmd_query(query, out, err);
  if (c->parsed()) return cmd_check(check, out, err);
  return cmd_bench(bench, out, err);
}

}  // namespace kdknn::cli
