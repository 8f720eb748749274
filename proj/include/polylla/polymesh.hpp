#pragma once

#include "polylla/traversal.hpp"
#include "polylla/triangulation.hpp"

#include <span>
#include <string>
#include <vector>

namespace polylla {

/// Final polygonal mesh. `mesh_array` holds, per polygon, its vertex count
/// followed by its ccw vertex indices.
struct PolyMesh {
  std::vector<double> vertices;  ///< copied from the source triangulation
  std::vector<Index> mesh_array;
  std::vector<std::size_t> offsets;  ///< per polygon, position of its count in mesh_array
  std::vector<std::vector<Index>> polygon_triangles;

  std::size_t polygon_count() const { return offsets.size(); }
  std::span<const Index> polygon(std::size_t i) const {
    const std::size_t at = offsets[i];
    return {mesh_array.data() + at + 1, static_cast<std::size_t>(mesh_array[at])};
  }
  Point point(Index v) const { return {vertices[2 * v], vertices[2 * v + 1]}; }
  /// Shoelace area, positive for ccw.
  double signed_area(std::size_t i) const;
};

/// Lays polygons out in the given order. Throws std::invalid_argument if any
/// polyline is not simple.
PolyMesh assemble(const Triangulation& tri, std::span<const Polyline> polylines);

/// Interior angle at every vertex of polygon i, in degrees in (0, 360).
std::vector<double> interior_angles(const PolyMesh& mesh, std::size_t i);

struct MeshStats {
  std::size_t input_points = 0;
  std::size_t triangle_count = 0;
  std::size_t region_count = 0;
  std::size_t polygon_count = 0;
  std::size_t tip_count = 0;
  std::size_t max_tips_in_one_polygon = 0;
  double avg_triangles_per_polygon = 0;
  /// Also the average edge count: polygons are closed.
  double avg_vertices_per_polygon = 0;
  double min_interior_angle = 0;
  double max_interior_angle = 0;
  double triangulation_min_angle = 0;
  double triangulation_max_angle = 0;
};

/// `traversal` supplies region and tip counts (before repair).
MeshStats compute_stats(const PolyMesh& mesh, const Triangulation& tri, const TraversalResult& traversal);

struct MeshIssue {
  enum class Kind {
    TooFewVertices,
    RepeatedVertex,
    NotCounterClockwise,
    TriangleUnassigned,
    TriangleShared,
    VertexUncovered,
    AreaMismatch,
    BoundaryMismatch,
    AngleBelowBound,
    DomainBoundaryEdge,
  };
  Kind kind;
  Index where;  ///< polygon, triangle or vertex depending on kind; -1 for global
  std::string message;
};

const char* to_string(MeshIssue::Kind kind);

struct VerifyReport {
  std::vector<MeshIssue> issues;
  bool ok() const { return issues.empty(); }
  std::size_t count(MeshIssue::Kind kind) const;
};

/// Checks simplicity, orientation, triangle partition, vertex coverage, area
/// conservation (relative 1e-9), that each polygon's boundary is the boundary
/// of its triangles, the angle lower bound (1e-9 degrees) and that every
/// domain boundary edge appears exactly once.
VerifyReport verify(const PolyMesh& mesh, const Triangulation& tri);

}  // namespace polylla
