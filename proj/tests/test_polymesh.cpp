#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "polylla/generator.hpp"
#include "polylla/pipeline.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

using namespace polylla;

namespace {

Triangulation random_delaunay(std::int64_t n, std::uint64_t seed) {
  PointSetSpec spec;
  spec.count = n;
  spec.seed = seed;
  return delaunay(random_points(spec));
}

Polyline make(std::vector<Index> ids, std::vector<Index> tris = {}) {
  Polyline p;
  p.vertex_ids = std::move(ids);
  p.source_triangles = std::move(tris);
  return p;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("assemble lays out counts and vertices") {
  const Triangulation square = fixture::unit_square();
  const std::vector<Polyline> one{make({0, 1, 2, 3}, {0, 1})};
  const PolyMesh m = assemble(square, one);
  CHECK(m.mesh_array == std::vector<Index>{4, 0, 1, 2, 3});
  CHECK(m.polygon_count() == 1);
  CHECK(m.signed_area(0) == doctest::Approx(1.0));

  const PolyMesh single = assemble(fixture::single_triangle(), std::vector<Polyline>{make({0, 1, 2}, {0})});
  CHECK(single.mesh_array == std::vector<Index>{3, 0, 1, 2});

  // Three polygons of 3, 5 and 4 vertices.
  const Triangulation fan = fixture::spiral_fan();
  const std::vector<Polyline> three{make({0, 1, 2}), make({0, 2, 3, 4, 5}), make({0, 5, 6, 1})};
  const PolyMesh f = assemble(fan, three);
  CHECK(f.mesh_array == std::vector<Index>{3, 0, 1, 2, 5, 0, 2, 3, 4, 5, 4, 0, 5, 6, 1});
  CHECK(f.offsets == std::vector<std::size_t>{0, 4, 10});
  CHECK(f.polygon(1).size() == 5);
  CHECK(f.polygon(2)[3] == 1);
}

TEST_CASE("assemble rejects a polyline with a repeated vertex") {
  const Triangulation fan = fixture::spiral_fan();
  const std::vector<Polyline> bad{make({0, 1, 2, 3, 4, 5, 6, 1})};
  CHECK_THROWS_AS(assemble(fan, bad), std::invalid_argument);
}

TEST_CASE("interior angles") {
  const PolyMesh sq = assemble(fixture::unit_square(), std::vector<Polyline>{make({0, 1, 2, 3})});
  for (double a : interior_angles(sq, 0)) CHECK(a == doctest::Approx(90));

  const PolyMesh rt = assemble(fixture::single_triangle(), std::vector<Polyline>{make({0, 1, 2})});
  const auto angles = interior_angles(rt, 0);
  CHECK(angles[0] == doctest::Approx(90));
  CHECK(std::accumulate(angles.begin(), angles.end(), 0.0) == doctest::Approx(180));

  // L-shaped hexagon: one reflex corner.
  const Triangulation l = Triangulation::build({0, 0, 2, 0, 2, 1, 1, 1, 1, 2, 0, 2}, {0, 1, 2, 0, 2, 3, 0, 3, 4, 0, 4, 5});
  const PolyMesh lm = assemble(l, std::vector<Polyline>{make({0, 1, 2, 3, 4, 5})});
  const auto la = interior_angles(lm, 0);
  CHECK(std::count_if(la.begin(), la.end(), [](double a) { return a > 180; }) == 1);
  CHECK(la[3] == doctest::Approx(270));
  CHECK(std::accumulate(la.begin(), la.end(), 0.0) == doctest::Approx(720));
}

TEST_CASE("stats of the square") {
  const Triangulation tri = fixture::unit_square();
  const MeshResult r = generate_mesh(tri);
  const MeshStats& s = r.stats;
  CHECK(s.input_points == 4);
  CHECK(s.triangle_count == 2);
  CHECK(s.region_count == 1);
  CHECK(s.polygon_count == 1);
  CHECK(s.tip_count == 0);
  CHECK(s.avg_triangles_per_polygon == 2);
  CHECK(s.avg_vertices_per_polygon == 4);
  CHECK(s.min_interior_angle == doctest::Approx(90));
  CHECK(s.max_interior_angle == doctest::Approx(90));
  CHECK(s.triangulation_min_angle == doctest::Approx(45));
  CHECK(s.triangulation_max_angle == doctest::Approx(90));
}

TEST_CASE("stats agree with a direct count and are reproducible") {
  const Triangulation tri = random_delaunay(2000, 3);
  const MeshResult r = generate_mesh(tri);
  const MeshStats& s = r.stats;
  std::size_t verts = 0;
  for (std::size_t i = 0; i < r.mesh.polygon_count(); ++i) verts += r.mesh.polygon(i).size();
  CHECK(s.polygon_count == r.repair.polygons.size());
  CHECK(s.avg_vertices_per_polygon == doctest::Approx(double(verts) / double(s.polygon_count)));
  CHECK(s.avg_triangles_per_polygon == doctest::Approx(double(tri.triangle_count()) / double(s.polygon_count)));
  CHECK(s.region_count == oracle::region_count(tri));
  CHECK(s.min_interior_angle >= s.triangulation_min_angle - 1e-9);
  CHECK(s.max_interior_angle < 360);

  const MeshStats again = compute_stats(r.mesh, tri, r.traversal);
  CHECK(same_bits(s.avg_vertices_per_polygon, again.avg_vertices_per_polygon));
  CHECK(same_bits(s.min_interior_angle, again.min_interior_angle));
  CHECK(same_bits(s.max_interior_angle, again.max_interior_angle));
  CHECK(s.tip_count == again.tip_count);
}

TEST_CASE("verify accepts pipeline output") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Triangulation tri = random_delaunay(500, seed);
    const VerifyReport rep = verify(generate_mesh(tri).mesh, tri);
    CAPTURE(seed);
    CHECK(rep.ok());
  }
  for (const char* name : {"three_tips", "nondelaunay", "hole"}) {
    const Triangulation tri = fixture::load_data(name);
    CAPTURE(name);
    CHECK(verify(generate_mesh(tri).mesh, tri).ok());
  }
}

TEST_CASE("verify flags corrupted meshes") {
  const Triangulation tri = random_delaunay(300, 11);
  const PolyMesh good = generate_mesh(tri).mesh;
  REQUIRE(good.polygon_count() > 2);
  using K = MeshIssue::Kind;

  SUBCASE("triangle claimed twice") {
    PolyMesh m = good;
    m.polygon_triangles[1].push_back(m.polygon_triangles[0][0]);
    const VerifyReport r = verify(m, tri);
    CHECK(r.count(K::TriangleShared) == 1);
  }
  SUBCASE("triangle dropped") {
    PolyMesh m = good;
    m.polygon_triangles[0].pop_back();
    const VerifyReport r = verify(m, tri);
    CHECK(r.count(K::TriangleUnassigned) == 1);
    CHECK(r.count(K::AreaMismatch) >= 1);
  }
  SUBCASE("clockwise polygon") {
    PolyMesh m = good;
    const std::size_t at = m.offsets[0] + 1;
    std::reverse(m.mesh_array.begin() + static_cast<std::ptrdiff_t>(at),
                 m.mesh_array.begin() + static_cast<std::ptrdiff_t>(at) + m.mesh_array[m.offsets[0]]);
    CHECK(verify(m, tri).count(K::NotCounterClockwise) == 1);
  }
  SUBCASE("repeated vertex") {
    PolyMesh m = good;
    m.mesh_array[m.offsets[0] + 2] = m.mesh_array[m.offsets[0] + 1];
    CHECK(verify(m, tri).count(K::RepeatedVertex) == 1);
  }
  SUBCASE("polygon missing") {
    PolyMesh m = good;
    const std::size_t cut = m.offsets.back();
    m.mesh_array.resize(cut);
    m.offsets.pop_back();
    m.polygon_triangles.pop_back();
    const VerifyReport r = verify(m, tri);
    CHECK_FALSE(r.ok());
    CHECK(r.count(K::TriangleUnassigned) > 0);
  }
  SUBCASE("issue names") {
    CHECK(std::string(to_string(K::AreaMismatch)).size() > 0);
  }
}
