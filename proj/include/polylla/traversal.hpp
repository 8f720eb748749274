#pragma once

#include "polylla/labeling.hpp"
#include "polylla/triangulation.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace polylla {

/// Closed boundary of one terminal-edge region, ccw. The last vertex
/// connects back to the first. A barrier edge a-b with tip b shows up as the
/// consecutive run a, b, a.
struct Polyline {
  std::vector<Index> vertex_ids;
  std::vector<Index> source_triangles;  ///< in first-visit order
  std::vector<Index> tips;              ///< barrier-edge tips

  /// No vertex repeats. A boundary can touch itself without a tip, so this
  /// is not the same as `tips.empty()`.
  bool is_simple() const;
};

/// Vertices j with ids[j-1] == ids[j+1], cyclically, in order of position.
std::vector<Index> detect_tips(std::span<const Index> vertex_ids);

/// Walks region boundaries. Holds scratch state sized to the triangulation,
/// so one instance should be reused across seeds; not thread-safe.
class PolygonWalker {
 public:
  PolygonWalker(const Triangulation& tri, const EdgeLabels& labels);

  /// Traces the boundary of the region containing `seed`, crossing only
  /// non-frontier edges. `visits` (one counter per triangle) is incremented
  /// each time the walk enters a triangle; more than 3 entries raises
  /// InternalError, as does a walk that fails to close.
  Polyline build(Index seed, std::span<std::uint8_t> visits);

 private:
  void enter(Index t, std::span<std::uint8_t> visits, Polyline& out);

  const Triangulation& tri_;
  const EdgeLabels& labels_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t walk_ = 0;
};

/// Single-shot convenience over PolygonWalker with private counters.
Polyline build_polygon(const Triangulation& tri, const EdgeLabels& labels, Index seed);

struct TraversalResult {
  std::vector<Polyline> polylines;   ///< one per seed, in seed order
  std::vector<Index> region_of;      ///< triangle -> polyline index
  std::vector<std::uint8_t> visits;  ///< per-triangle entry counts

  std::vector<Index> simple_ids() const;
  std::vector<Index> non_simple_ids() const;
  std::size_t max_visits() const;
};

/// Builds one polyline per seed. With `parallel`, seeds are split across
/// hardware threads; output is identical to the sequential run.
TraversalResult build_all(const Triangulation& tri, const EdgeLabels& labels, bool parallel = false);

}  // namespace polylla
