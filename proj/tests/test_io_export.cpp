#include "doctest.h"

#include "fixtures.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "polylla/generator.hpp"
#include "polylla/pipeline.hpp"

#include <sstream>

using namespace polylla;

namespace {

MeshResult random_mesh(std::int64_t n, std::uint64_t seed) {
  PointSetSpec spec;
  spec.count = n;
  spec.seed = seed;
  return generate_mesh(delaunay(random_points(spec)));
}

std::size_t count_of(const std::string& text, const std::string& what) {
  std::size_t n = 0;
  for (auto at = text.find(what); at != std::string::npos; at = text.find(what, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("format_number") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1) == "1");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(0.1, 6) == "0.1");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("OFF of the square") {
  const Triangulation tri = fixture::unit_square();
  const MeshResult r = generate_mesh(tri);
  CHECK(write_off(r.mesh) == "OFF\n4 1 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3\n");
  CHECK(write_meshtxt(r.mesh) == "4 0 1 2 3\n");
}

TEST_CASE("OFF round trip") {
  const MeshResult r = random_mesh(1000, 2);
  const oracle::OffMesh off = oracle::parse_off(write_off(r.mesh));
  REQUIRE(off.xyz.size() == 3 * (r.mesh.vertices.size() / 2));
  for (std::size_t v = 0; v < r.mesh.vertices.size() / 2; ++v) {
    CHECK(off.xyz[3 * v] == r.mesh.vertices[2 * v]);
    CHECK(off.xyz[3 * v + 1] == r.mesh.vertices[2 * v + 1]);
    CHECK(off.xyz[3 * v + 2] == 0);
  }
  REQUIRE(off.faces.size() == r.mesh.polygon_count());
  for (std::size_t i = 0; i < off.faces.size(); ++i) {
    const auto p = r.mesh.polygon(i);
    CHECK(off.faces[i] == std::vector<Index>(p.begin(), p.end()));
  }
}

TEST_CASE("VTK structure") {
  const MeshResult r = random_mesh(200, 1);
  const std::string vtk = write_vtk(r.mesh);
  std::istringstream in(vtk);
  std::string line;
  std::getline(in, line);
  CHECK(line == "# vtk DataFile Version 2.0");
  std::getline(in, line);
  std::getline(in, line);
  CHECK(line == "ASCII");
  std::getline(in, line);
  CHECK(line == "DATASET POLYDATA");
  std::string kw, type;
  std::size_t n = 0, np = 0, size = 0;
  in >> kw >> n >> type;
  CHECK(kw == "POINTS");
  CHECK(n == r.mesh.vertices.size() / 2);
  CHECK(type == "double");
  for (std::size_t v = 0; v < n; ++v) {
    double x, y, z;
    in >> x >> y >> z;
    CHECK(x == r.mesh.vertices[2 * v]);
    CHECK(y == r.mesh.vertices[2 * v + 1]);
  }
  in >> kw >> np >> size;
  CHECK(kw == "POLYGONS");
  CHECK(np == r.mesh.polygon_count());
  CHECK(size == r.mesh.mesh_array.size());
  std::vector<Index> cells(size);
  for (auto& c : cells) in >> c;
  CHECK(cells == r.mesh.mesh_array);
  CHECK_FALSE(in.fail());
}

TEST_CASE("SVG has one closed path per polygon") {
  const MeshResult r = random_mesh(1000, 5);
  const std::string svg = write_svg(r.mesh);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count_of(svg, "<path ") == r.mesh.polygon_count());
  CHECK(count_of(svg, " Z\"") == r.mesh.polygon_count());
  CHECK(svg.find("</svg>") != std::string::npos);

  const std::vector<std::string> fills{"#abc", "#def"};
  const std::string filled = write_svg(r.mesh, {}, fills);
  CHECK(count_of(filled, "fill=\"#abc\"") == (r.mesh.polygon_count() + 1) / 2);

  // y is flipped: the square's top corner (1,1) is written as (1,-1).
  const Triangulation sq = fixture::unit_square();
  const std::string s = write_svg(generate_mesh(sq).mesh);
  CHECK(s.find("M0 0 L1 0 L1 -1 L0 -1 Z") != std::string::npos);
  CHECK(s.find("viewBox=\"-0.02 -1.02 1.04 1.04\"") != std::string::npos);
}

TEST_CASE("export options are checked") {
  const Triangulation tri = fixture::unit_square();
  const PolyMesh m = generate_mesh(tri).mesh;
  ExportOptions o;
  o.precision = 5;
  CHECK_THROWS_AS(write_off(m, o), std::invalid_argument);
  o.precision = 18;
  CHECK_THROWS_AS(write_vtk(m, o), std::invalid_argument);
  o.precision = 6;
  o.svg_width = 0;
  CHECK_THROWS_AS(write_svg(m, o), std::invalid_argument);
}

TEST_CASE("stats JSON") {
  const MeshResult r = random_mesh(500, 4);
  const auto plain = nlohmann::json::parse(write_stats_json(r.stats, std::nullopt));
  for (const char* key : {"input_points", "triangle_count", "region_count", "polygon_count", "tip_count",
                          "max_tips_in_one_polygon", "avg_triangles_per_polygon", "avg_vertices_per_polygon",
                          "min_interior_angle", "max_interior_angle"}) {
    CAPTURE(key);
    CHECK(plain.contains(key));
  }
  CHECK_FALSE(plain.contains("time_total"));
  CHECK(plain["polygon_count"] == r.stats.polygon_count);
  CHECK(plain["avg_vertices_per_polygon"].get<double>() == r.stats.avg_vertices_per_polygon);

  const auto timed = nlohmann::json::parse(write_stats_json(r.stats, r.times));
  const double l = timed["time_label"], t = timed["time_traversal"], p = timed["time_repair"];
  const double total = timed["time_total"];
  CHECK(l >= 0);
  CHECK(t >= 0);
  CHECK(p >= 0);
  CHECK(l + t + p <= total);
}
