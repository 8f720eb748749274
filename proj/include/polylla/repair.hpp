#pragma once

#include "polylla/labeling.hpp"
#include "polylla/traversal.hpp"
#include "polylla/triangulation.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace polylla {

/// Edges around a tip b in ccw order, starting just after the barrier edge
/// b->a and ending just before it. Each entry is the far endpoint.
struct TipFan {
  Index tip = kNoNeighbor;
  Index barrier_end = kNoNeighbor;
  std::vector<Index> ends;
  std::vector<std::pair<Index, int>> slots;  ///< (triangle, slot) of each edge
  bool resolved = false;                     ///< another frontier edge meets the tip
};

/// Result of splitting one non-simple polygon.
struct SplitRecord {
  Index parent = kNoNeighbor;  ///< index into the traversal's polylines
  std::size_t tips = 0;
  std::size_t pieces = 0;
};

struct Promotion {
  EdgeKey edge;
  Index t1 = kNoNeighbor;
  Index t2 = kNoNeighbor;
};

struct RepairResult {
  /// Final polygons: every simple traversal polyline, and the products of
  /// each non-simple one placed where the parent was.
  std::vector<Polyline> polygons;
  std::vector<Index> parent;        ///< per polygon, the traversal polyline it came from
  std::vector<EdgeKey> promoted;    ///< edges relabelled to Frontier, in order
  std::vector<SplitRecord> splits;  ///< one per non-simple polyline
  std::size_t max_rotation_visits = 0;
  std::size_t max_corner_visits = 0;  ///< rotations made while splitting at repeated vertices
  std::size_t reentries = 0;  ///< products that were still non-simple and were split again
  std::size_t pinches = 0;    ///< promotions made at a repeated vertex that is not a tip
};

/// Repairs non-simple polygons by promoting, for each barrier tip, the middle
/// internal edge around it to a frontier edge, then re-walking from the
/// triangles beside each promoted edge. `labels` is updated in place.
class Repairer {
 public:
  Repairer(const Triangulation& tri, EdgeLabels& labels);

  /// Rotates once around `tip`, which must be the end of barrier edge
  /// `barrier_end`-`tip`.
  TipFan fan(Index tip, Index barrier_end);

  /// Number of non-frontier edges at the tip besides the barrier edge.
  std::size_t tip_degree(Index tip, Index barrier_end) { return fan(tip, barrier_end).ends.size(); }

  /// Relabels the ceil(deg/2)-th edge of the fan as Frontier and queues both
  /// of its triangles as seeds. Returns nullopt when the tip was already
  /// resolved by an earlier promotion. Edges ending in `avoid` are passed
  /// over for the next most central one, unless every edge does.
  std::optional<Promotion> promote(const TipFan& f, std::span<const Index> avoid = {});

  /// Splits one non-simple polyline into simple ones, in seed-list order.
  std::vector<Polyline> split_nonsimple(const Polyline& p);

  RepairResult run(const TraversalResult& traversal);

  std::span<const std::uint8_t> rotation_visits() const { return rotations_; }

 private:
  /// Edges strictly inside the corner of `p` at position j, ccw from the
  /// outgoing boundary edge to the incoming one.
  TipFan corner(const Polyline& p, std::size_t j);
  /// Promotes one edge to separate a non-simple polyline: at its tips if it
  /// has any, otherwise in a corner at a repeated vertex.
  void promote_within(const Polyline& p);

  const Triangulation& tri_;
  EdgeLabels& labels_;
  PolygonWalker walker_;
  std::vector<Index> aid_;             ///< vertex -> some incident triangle
  std::vector<std::uint8_t> rotations_;  ///< per-triangle rotation entries around tips
  std::vector<std::uint8_t> corners_;    ///< same, around repeated vertices
  std::vector<std::uint8_t> pending_;    ///< triangles awaiting a re-walk
  std::vector<std::uint8_t> visits_;     ///< re-walk entries
  std::vector<Index> queue_;
  std::vector<EdgeKey> promoted_;
  std::size_t max_rotation_visits_ = 0;
  std::size_t max_corner_visits_ = 0;
  std::size_t reentries_ = 0;
  std::size_t pinches_ = 0;
};

/// Convenience wrapper over Repairer.
RepairResult repair(const Triangulation& tri, EdgeLabels& labels, const TraversalResult& traversal);

}  // namespace polylla
