#pragma once

#include "polylla/triangulation.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace polylla {

enum class EdgeClass : std::uint8_t {
  Frontier,          ///< longest edge of neither triangle, or a boundary edge that is not a longest edge
  Internal,          ///< longest edge of exactly one of its two triangles
  Terminal,          ///< longest edge of both triangles
  BoundaryTerminal,  ///< boundary edge that is the longest edge of its triangle
};

const char* to_string(EdgeClass c);

/// Strict total order on edges: exact squared length, then EdgeKey. Returns
/// true when edge `a` precedes edge `b`.
bool edge_less(const Triangulation& tri, EdgeKey a, EdgeKey b);

/// Per-triangle longest edges, per-edge classes and seed triangles.
///
/// Edges are numbered densely in first-seen (triangle, slot) order; the map
/// from triangle slots to edge ids has 3m entries and the per-edge arrays
/// hold (3m + b) / 2 entries for b boundary edges.
class EdgeLabels {
 public:
  std::vector<std::uint8_t> longest_slot;  ///< per triangle
  std::vector<Index> edge_of_slot;         ///< 3m entries, indexed 3t + slot
  std::vector<EdgeKey> edges;              ///< per edge id
  std::vector<EdgeClass> edge_class;       ///< per edge id
  std::vector<Index> seeds;                ///< one triangle per terminal-edge region

  Index edge_count() const { return static_cast<Index>(edges.size()); }
  Index edge_id(Index t, int slot) const { return edge_of_slot[3 * t + slot]; }
  EdgeClass class_at(Index t, int slot) const { return edge_class[edge_id(t, slot)]; }

  /// True for edges that bound polygons: Frontier and BoundaryTerminal.
  bool is_frontier(Index t, int slot) const {
    const EdgeClass c = class_at(t, slot);
    return c == EdgeClass::Frontier || c == EdgeClass::BoundaryTerminal;
  }
  int frontier_count(Index t) const {
    return int(is_frontier(t, 0)) + int(is_frontier(t, 1)) + int(is_frontier(t, 2));
  }

  /// Edge id for a key, or nullopt if the edge does not exist.
  std::optional<Index> find(EdgeKey key) const;
  std::optional<EdgeClass> class_of(EdgeKey key) const;

  std::size_t count(EdgeClass c) const;

 private:
  friend EdgeLabels classify_edges(const Triangulation&, std::vector<std::uint8_t>);
  std::vector<std::pair<EdgeKey, Index>> sorted_;
};

/// Slot of each triangle's longest edge under `edge_less`.
std::vector<std::uint8_t> longest_edges(const Triangulation& tri);

/// Classifies every edge. `seeds` is left empty.
EdgeLabels classify_edges(const Triangulation& tri, std::vector<std::uint8_t> longest_slot);

/// One triangle per Terminal edge (the smaller incident index) and per
/// BoundaryTerminal edge (its only triangle), in edge-id order.
std::vector<Index> collect_seeds(const Triangulation& tri, const EdgeLabels& labels);

/// Runs longest_edges, classify_edges and collect_seeds.
EdgeLabels label(const Triangulation& tri);

struct LeppPath {
  /// Starts at the query triangle and ends at the triangle whose longest edge
  /// is the terminal edge.
  std::vector<Index> triangles;
  EdgeKey terminal_edge;
  /// The other triangle sharing the terminal edge; kNoNeighbor when the
  /// terminal edge lies on the domain boundary.
  Index partner = kNoNeighbor;
};

/// Longest-edge propagation path from t: repeatedly cross the current
/// triangle's longest edge until that edge is also the longest edge of the
/// next triangle, or lies on the boundary. No triangle repeats because the
/// crossed edges strictly increase under `edge_less`.
LeppPath lepp(const Triangulation& tri, std::span<const std::uint8_t> longest_slot, Index t);

}  // namespace polylla
