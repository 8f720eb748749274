#include "polylla/polymesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polylla {

double PolyMesh::signed_area(std::size_t i) const {
  const auto ids = polygon(i);
  double sum = 0;
  for (std::size_t j = 0; j < ids.size(); ++j) {
    const Point a = point(ids[j]);
    const Point b = point(ids[(j + 1) % ids.size()]);
    sum += a.x * b.y - a.y * b.x;
  }
  return sum / 2;
}

PolyMesh assemble(const Triangulation& tri, std::span<const Polyline> polylines) {
  PolyMesh mesh;
  mesh.vertices.assign(tri.vertices().begin(), tri.vertices().end());
  std::size_t total = 0;
  for (const auto& p : polylines) total += p.vertex_ids.size() + 1;
  mesh.mesh_array.reserve(total);
  mesh.offsets.reserve(polylines.size());
  mesh.polygon_triangles.reserve(polylines.size());
  for (std::size_t i = 0; i < polylines.size(); ++i) {
    const Polyline& p = polylines[i];
    if (!p.is_simple()) throw std::invalid_argument("polyline " + std::to_string(i) + " is not simple");
    mesh.offsets.push_back(mesh.mesh_array.size());
    mesh.mesh_array.push_back(static_cast<Index>(p.vertex_ids.size()));
    mesh.mesh_array.insert(mesh.mesh_array.end(), p.vertex_ids.begin(), p.vertex_ids.end());
    mesh.polygon_triangles.push_back(p.source_triangles);
  }
  return mesh;
}

std::vector<double> interior_angles(const PolyMesh& mesh, std::size_t i) {
  const auto ids = mesh.polygon(i);
  const std::size_t n = ids.size();
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j)
    out[j] = corner_angle(mesh.point(ids[(j + n - 1) % n]), mesh.point(ids[j]), mesh.point(ids[(j + 1) % n]));
  return out;
}

MeshStats compute_stats(const PolyMesh& mesh, const Triangulation& tri, const TraversalResult& traversal) {
  MeshStats s;
  s.input_points = static_cast<std::size_t>(tri.vertex_count());
  s.triangle_count = static_cast<std::size_t>(tri.triangle_count());
  s.region_count = traversal.polylines.size();
  s.polygon_count = mesh.polygon_count();
  for (const auto& p : traversal.polylines) {
    s.tip_count += p.tips.size();
    s.max_tips_in_one_polygon = std::max(s.max_tips_in_one_polygon, p.tips.size());
  }
  if (s.polygon_count > 0) {
    s.avg_triangles_per_polygon = double(s.triangle_count) / double(s.polygon_count);
    s.avg_vertices_per_polygon = double(mesh.mesh_array.size() - s.polygon_count) / double(s.polygon_count);
  }
  double lo = 360, hi = 0;
  for (std::size_t i = 0; i < mesh.polygon_count(); ++i) {
    for (double a : interior_angles(mesh, i)) {
      lo = std::min(lo, a);
      hi = std::max(hi, a);
    }
  }
  if (s.polygon_count > 0) {
    s.min_interior_angle = lo;
    s.max_interior_angle = hi;
  }
  if (s.triangle_count > 0) std::tie(s.triangulation_min_angle, s.triangulation_max_angle) = tri.angle_range();
  return s;
}

const char* to_string(MeshIssue::Kind kind) {
  using K = MeshIssue::Kind;
  switch (kind) {
    case K::TooFewVertices: return "too-few-vertices";
    case K::RepeatedVertex: return "repeated-vertex";
    case K::NotCounterClockwise: return "not-ccw";
    case K::TriangleUnassigned: return "triangle-unassigned";
    case K::TriangleShared: return "triangle-shared";
    case K::VertexUncovered: return "vertex-uncovered";
    case K::AreaMismatch: return "area-mismatch";
    case K::BoundaryMismatch: return "boundary-mismatch";
    case K::AngleBelowBound: return "angle-below-bound";
    case K::DomainBoundaryEdge: return "domain-boundary-edge";
  }
  return "unknown";
}

std::size_t VerifyReport::count(MeshIssue::Kind kind) const {
  return std::count_if(issues.begin(), issues.end(), [kind](const MeshIssue& i) { return i.kind == kind; });
}

namespace {

using DirectedEdge = std::pair<Index, Index>;

bool near(double a, double b, double scale) { return std::abs(a - b) <= 1e-9 * scale; }

}  // namespace

VerifyReport verify(const PolyMesh& mesh, const Triangulation& tri) {
  using K = MeshIssue::Kind;
  VerifyReport report;
  auto add = [&](K kind, Index where, std::string msg) { report.issues.push_back({kind, where, std::move(msg)}); };
  const auto m = static_cast<std::size_t>(tri.triangle_count());
  const auto n = static_cast<std::size_t>(tri.vertex_count());
  const auto np = mesh.polygon_count();
  const auto ts = [](auto v) { return std::to_string(v); };

  // Shape of each polygon.
  std::vector<Index> seen(n, -1);
  for (std::size_t i = 0; i < np; ++i) {
    const auto ids = mesh.polygon(i);
    const auto pi = static_cast<Index>(i);
    if (ids.size() < 3) add(K::TooFewVertices, pi, "polygon " + ts(i) + " has " + ts(ids.size()) + " vertices");
    for (Index v : ids) {
      if (seen[v] == pi) add(K::RepeatedVertex, pi, "polygon " + ts(i) + " repeats vertex " + ts(v));
      seen[v] = pi;
    }
    if (!(mesh.signed_area(i) > 0)) add(K::NotCounterClockwise, pi, "polygon " + ts(i) + " is not ccw");
  }

  // Partition.
  std::vector<Index> owner(m, -1);
  bool partition_ok = true;
  for (std::size_t i = 0; i < np; ++i) {
    for (Index t : mesh.polygon_triangles[i]) {
      if (owner[t] != -1) {
        partition_ok = false;
        add(K::TriangleShared, t, "triangle " + ts(t) + " in polygons " + ts(owner[t]) + " and " + ts(i));
      } else {
        owner[t] = static_cast<Index>(i);
      }
    }
  }
  for (std::size_t t = 0; t < m; ++t) {
    if (owner[t] == -1) {
      partition_ok = false;
      add(K::TriangleUnassigned, static_cast<Index>(t), "triangle " + ts(t) + " is in no polygon");
    }
  }

  // Coverage of every vertex used by the triangulation.
  std::vector<std::uint8_t> used(n, 0), covered(n, 0);
  for (Index v : tri.triangles()) used[v] = 1;
  for (std::size_t i = 0; i < np; ++i)
    for (Index v : mesh.polygon(i)) covered[v] = 1;
  for (std::size_t v = 0; v < n; ++v)
    if (used[v] && !covered[v]) add(K::VertexUncovered, static_cast<Index>(v), "vertex " + ts(v) + " is on no polygon");

  // Area, globally and per polygon.
  const double total = tri.total_area();
  double sum = 0;
  std::vector<double> tri_sum(np, 0);
  for (std::size_t i = 0; i < np; ++i) {
    sum += mesh.signed_area(i);
    for (Index t : mesh.polygon_triangles[i]) tri_sum[i] += tri.signed_area(t);
  }
  if (!near(sum, total, std::abs(total)))
    add(K::AreaMismatch, -1, "polygon area " + ts(sum) + " differs from triangulation area " + ts(total));
  for (std::size_t i = 0; i < np; ++i) {
    const double a = mesh.signed_area(i);
    if (!near(a, tri_sum[i], std::max(std::abs(a), std::abs(tri_sum[i]))))
      add(K::AreaMismatch, static_cast<Index>(i), "polygon " + ts(i) + " area differs from its triangles");
  }

  // Each polygon's boundary equals the boundary of its triangle set.
  if (partition_ok) {
    std::vector<std::vector<DirectedEdge>> expected(np);
    for (std::size_t t = 0; t < m; ++t) {
      const auto ti = static_cast<Index>(t);
      for (int k = 0; k < 3; ++k) {
        const Index nb = tri.neighbor(ti, k);
        if (nb == kNoNeighbor || owner[nb] != owner[t]) expected[owner[t]].push_back(tri.directed_edge(ti, k));
      }
    }
    for (std::size_t i = 0; i < np; ++i) {
      const auto ids = mesh.polygon(i);
      std::vector<DirectedEdge> actual;
      actual.reserve(ids.size());
      for (std::size_t j = 0; j < ids.size(); ++j) actual.emplace_back(ids[j], ids[(j + 1) % ids.size()]);
      std::sort(actual.begin(), actual.end());
      std::sort(expected[i].begin(), expected[i].end());
      if (actual != expected[i])
        add(K::BoundaryMismatch, static_cast<Index>(i), "polygon " + ts(i) + " boundary differs from its triangles");
    }
  }

  // Angle lower bound.
  if (m > 0 && np > 0) {
    const double bound = tri.angle_range().first;
    for (std::size_t i = 0; i < np; ++i) {
      for (double a : interior_angles(mesh, i)) {
        if (a < bound - 1e-9) {
          add(K::AngleBelowBound, static_cast<Index>(i),
              "polygon " + ts(i) + " has angle " + ts(a) + " below triangulation minimum " + ts(bound));
          break;
        }
      }
    }
  }

  // Domain boundary edges appear exactly once.
  std::vector<DirectedEdge> all;
  all.reserve(mesh.mesh_array.size());
  for (std::size_t i = 0; i < np; ++i) {
    const auto ids = mesh.polygon(i);
    for (std::size_t j = 0; j < ids.size(); ++j) all.emplace_back(ids[j], ids[(j + 1) % ids.size()]);
  }
  std::sort(all.begin(), all.end());
  for (std::size_t t = 0; t < m; ++t) {
    for (int k = 0; k < 3; ++k) {
      const auto ti = static_cast<Index>(t);
      if (!tri.is_boundary(ti, k)) continue;
      const DirectedEdge e = tri.directed_edge(ti, k);
      const auto [lo, hi] = std::equal_range(all.begin(), all.end(), e);
      if (hi - lo != 1)
        add(K::DomainBoundaryEdge, ti,
            "boundary edge " + ts(e.first) + "-" + ts(e.second) + " appears " + ts(hi - lo) + " times");
    }
  }
  return report;
}

}  // namespace polylla
