#pragma once

// Subcommands of the `kdknn` tool. Each returns the process exit code and
// writes only to the given streams, so they can be driven in-process.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "kdknn/metrics.hpp"

namespace kdknn::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitDisagreement = 1,  // check or bench found a wrong answer
  kExitUsage = 2,         // bad arguments or unreadable/malformed input
};

struct BuildOptions {
  std::size_t dims = 0;
  std::string input;
  std::string output;
};

struct QueryOptions {
  std::string tree;
  std::string point;
  std::size_t k = 0;
};

struct CheckOptions {
  std::size_t dims = 0;
  std::string input;
  std::string queries;
  std::size_t k = 0;
};

inline constexpr std::uint64_t kDefaultBenchSeed = 42;
inline constexpr std::size_t kDefaultBenchQueries = 100;
/// Bench coordinates are drawn from [0, kBenchCoordRange).
inline constexpr Coord kBenchCoordRange = 1'000'000;

struct BenchOptions {
  std::size_t dims = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t queries = kDefaultBenchQueries;
  std::uint64_t seed = kDefaultBenchSeed;
};

int cmd_build(const BuildOptions& opts, std::ostream& out, std::ostream& err);
int cmd_query(const QueryOptions& opts, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

/// `count` points with `dims` coordinates from a seeded mt19937_64: each
/// coordinate is the next 64-bit output reduced modulo kBenchCoordRange,
/// drawn point by point. Identical on every platform for a given seed.
std::vector<DataPoint> bench_points(std::mt19937_64& rng, std::size_t count,
                                    std::size_t dims);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace kdknn::cli
