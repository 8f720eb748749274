#pragma once

#include "polylla/predicates.hpp"
#include "polylla/triangulation.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace polylla {

/// Random point set inside an axis-aligned square.
struct PointSetSpec {
  std::int64_t count = 100;  ///< interior points drawn; the 4 corners are added on top
  std::uint64_t seed = 0;
  double min_x = 0.0;
  double min_y = 0.0;
  double side = 1.0;
  /// Points closer than this to a side are projected onto it. Negative means
  /// "use the default", 1e-9 * side.
  double gamma = -1.0;

  double effective_gamma() const { return gamma < 0.0 ? 1e-9 * side : gamma; }
};

/// The 4 square corners (ccw from the min corner) followed by `count` points
/// drawn uniformly from the square. Coordinates within gamma of a side are
/// snapped onto it and exact duplicates are redrawn.
///
/// The stream is std::mt19937_64 seeded with `spec.seed`; each coordinate is
/// the top 53 bits of one draw scaled to [0, 1), so sequences are identical
/// on every conforming platform.
///
/// Throws std::invalid_argument for count < 3, side <= 0 or gamma >= side / 2.
std::vector<Point> random_points(const PointSetSpec& spec);

/// Delaunay triangulation of the convex hull of `points`, by incremental
/// Bowyer-Watson insertion along a Hilbert curve with exact predicates.
///
/// Co-circular configurations are resolved by symbolic perturbation: the
/// point with the smallest index is treated as lying slightly inside any
/// circle it is co-circular with. In effect, among co-circular vertices the
/// diagonals fan out of the lowest index (the unit square 0,1,2,3 is split
/// along (0,2)). The output is a pure function of the input sequence.
///
/// Vertex indices of the result equal input positions. Throws GeometryError
/// for fewer than 3 points, duplicates, or an all-collinear input.
Triangulation delaunay(std::span<const Point> points);

/// Flattens points into the interleaved x,y layout of Triangulation.
std::vector<double> interleave(std::span<const Point> points);

}  // namespace polylla
