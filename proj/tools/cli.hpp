#pragma once

#include "polylla/pipeline.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace polylla::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kVerifyFailed = 3,
  kInternalError = 4,
};

struct RunConfig {
  // Files input.
  std::string node, ele, neigh;
  // Random input.
  std::optional<std::int64_t> random;
  std::uint64_t seed = 0;
  std::optional<double> gamma;

  std::string off, vtk, svg, meshtxt, stats;
  std::string save_triangulation;  ///< prefix for .node/.ele/.neigh
  bool verify = false;
  bool timings = true;  ///< include phase times in the stats JSON
  bool parallel = false;
  std::vector<std::int64_t> bench;
  int reps = 1;
};

/// Parses argv. On failure or --help returns the exit code to use, having
/// written the message to `out` or `err`.
std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs one configuration end to end and returns its exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct BenchRow {
  std::int64_t n = 0;
  std::size_t triangles = 0;
  std::size_t polygons = 0;
  PhaseTimes mean;
};

/// Per-phase means over `config.reps` runs for each size in `config.bench`,
/// using random points with `config.seed`. Triangulation time is excluded.
std::vector<BenchRow> bench(const RunConfig& config);

/// CSV with header "n,triangles,polygons,label,traversal,repair,total".
std::string bench_csv(const std::vector<BenchRow>& rows);

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polylla::cli
