#include "cli.hpp"

#include "polylla/error.hpp"
#include "polylla/generator.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace polylla::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !out.write(text.data(), static_cast<std::streamsize>(text.size())))
    throw std::ios_base::failure("cannot write " + path);
}

PointSetSpec point_spec(const RunConfig& c, std::int64_t count) {
  PointSetSpec spec;
  spec.count = count;
  spec.seed = c.seed;
  if (c.gamma) spec.gamma = *c.gamma;
  return spec;
}

Triangulation load_input(const RunConfig& c) {
  if (c.random) return delaunay(random_points(point_spec(c, *c.random)));
  const std::string node = read_file(c.node);
  const std::string ele = read_file(c.ele);
  std::optional<std::string> neigh;
  if (!c.neigh.empty()) neigh = read_file(c.neigh);
  return load_triangle_files(node, ele, neigh ? std::optional<std::string_view>(*neigh) : std::nullopt);
}

}  // namespace

std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Polygonal meshes from triangulations by terminal-edge regions", "polylla"};
  app.option_defaults()->always_capture_default();

  auto* node = app.add_option("--node", c.node, "Triangle .node file");
  auto* ele = app.add_option("--ele", c.ele, "Triangle .ele file");
  app.add_option("--neigh", c.neigh, "Triangle .neigh file (rebuilt when absent)");
  auto* random = app.add_option("--random", c.random, "Use N random points in the unit square plus its 4 corners")
                     ->check(CLI::Range(std::int64_t{3}, std::int64_t{1} << 40));
  app.add_option("--seed", c.seed, "Random seed");
  app.add_option("--gamma", c.gamma, "Snapping tolerance to the square sides (default 1e-9)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--off", c.off, "Write the mesh as OFF");
  app.add_option("--vtk", c.vtk, "Write the mesh as legacy VTK");
  app.add_option("--svg", c.svg, "Write the mesh as SVG");
  app.add_option("--meshtxt", c.meshtxt, "Write the mesh array, one polygon per line");
  app.add_option("--stats", c.stats, "Write statistics and phase times as JSON");
  app.add_option("--save-triangulation", c.save_triangulation,
                 "Write the input triangulation to PREFIX.node/.ele/.neigh");
  app.add_flag("--verify", c.verify, "Check mesh invariants; exit 3 on failure");
  app.add_flag("!--no-timings", c.timings, "Leave phase times out of the stats JSON");
  app.add_flag("--parallel", c.parallel, "Build polygons on all hardware threads");
  auto* bench = app.add_option("--bench", c.bench, "Benchmark these point counts (comma separated)")
                    ->delimiter(',')
                    ->check(CLI::Range(std::int64_t{3}, std::int64_t{1} << 40));
  app.add_option("--reps", c.reps, "Repetitions averaged for phase times")->check(CLI::PositiveNumber);

  random->excludes(node)->excludes(ele);
  node->needs(ele);
  ele->needs(node);
  bench->excludes(node)->excludes(ele)->excludes(random);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (c.bench.empty() && !c.random && c.node.empty()) {
    err << "polylla: give --node/--ele, --random N or --bench LIST\n";
    return kUsage;
  }
  return c;
}

std::vector<BenchRow> bench(const RunConfig& config) {
  std::vector<BenchRow> rows;
  for (std::int64_t n : config.bench) {
    const Triangulation tri = delaunay(random_points(point_spec(config, n)));
    BenchRow row;
    row.n = n;
    row.triangles = static_cast<std::size_t>(tri.triangle_count());
    for (int r = 0; r < config.reps; ++r) {
      const MeshResult res = generate_mesh(tri, config.parallel);
      row.polygons = res.mesh.polygon_count();
      row.mean.label += res.times.label;
      row.mean.traversal += res.times.traversal;
      row.mean.repair += res.times.repair;
      row.mean.total += res.times.total;
    }
    const double k = config.reps;
    row.mean = {row.mean.label / k, row.mean.traversal / k, row.mean.repair / k, row.mean.total / k};
    rows.push_back(row);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "n,triangles,polygons,label,traversal,repair,total\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.triangles) + ',' + std::to_string(r.polygons) + ',' +
           format_number(r.mean.label, 6) + ',' + format_number(r.mean.traversal, 6) + ',' +
           format_number(r.mean.repair, 6) + ',' + format_number(r.mean.total, 6) + '\n';
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.reps < 1) {
      err << "polylla: --reps must be at least 1\n";
      return kUsage;
    }
    if (!config.bench.empty()) {
      out << bench_csv(bench(config));
      return kOk;
    }

    const Triangulation tri = load_input(config);
    if (!config.save_triangulation.empty()) {
      const TriangleFiles files = write_triangle_files(tri);
      write_file(config.save_triangulation + ".node", files.node);
      write_file(config.save_triangulation + ".ele", files.ele);
      write_file(config.save_triangulation + ".neigh", files.neigh);
    }

    MeshResult result = generate_mesh(tri, config.parallel);
    PhaseTimes sum = result.times;
    for (int r = 1; r < config.reps; ++r) {
      const MeshResult again = generate_mesh(tri, config.parallel);
      sum.label += again.times.label;
      sum.traversal += again.times.traversal;
      sum.repair += again.times.repair;
      sum.total += again.times.total;
    }
    const double k = config.reps;
    const PhaseTimes mean{sum.label / k, sum.traversal / k, sum.repair / k, sum.total / k};

    if (config.verify) {
      const VerifyReport report = verify(result.mesh, tri);
      if (!report.ok()) {
        err << "polylla: verification failed with " << report.issues.size() << " issue(s)\n";
        std::size_t shown = 0;
        for (const auto& issue : report.issues) {
          if (++shown > 20) break;
          err << "  [" << to_string(issue.kind) << "] " << issue.message << '\n';
        }
        return kVerifyFailed;
      }
    }

    const ExportOptions options;
    if (!config.off.empty()) write_file(config.off, write_off(result.mesh, options));
    if (!config.vtk.empty()) write_file(config.vtk, write_vtk(result.mesh, options));
    if (!config.svg.empty()) write_file(config.svg, write_svg(result.mesh, options));
    if (!config.meshtxt.empty()) write_file(config.meshtxt, write_meshtxt(result.mesh));
    if (!config.stats.empty())
      write_file(config.stats,
                 write_stats_json(result.stats, config.timings ? std::optional<PhaseTimes>(mean) : std::nullopt));

    const MeshStats& s = result.stats;
    out << "points " << s.input_points << ", triangles " << s.triangle_count << ", regions " << s.region_count
        << ", polygons " << s.polygon_count << ", tips " << s.tip_count;
    if (config.verify) out << ", verified";
    out << '\n';
    return kOk;
  } catch (const InternalError& e) {
    err << "polylla: internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const Error& e) {
    err << "polylla: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "polylla: " << e.what() << '\n';
    return kInputError;
  } catch (const std::ios_base::failure& e) {
    err << "polylla: " << e.what() << '\n';
    return kInputError;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto parsed = parse_args(argc, argv, out, err);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return run(std::get<RunConfig>(parsed), out, err);
}

}  // namespace polylla::cli
