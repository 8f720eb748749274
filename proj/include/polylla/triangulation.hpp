#pragma once

#include "polylla/predicates.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polylla {

using Index = std::int32_t;

/// Neighbor entry for a triangle edge on the domain boundary (including hole
/// boundaries). Matches the `-1` used by Triangle's `.neigh` files.
inline constexpr Index kNoNeighbor = -1;

/// Canonical undirected edge identity, `lo < hi`. Ordered lexicographically.
struct EdgeKey {
  Index lo = 0;
  Index hi = 0;

  static constexpr EdgeKey of(Index a, Index b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

  friend constexpr auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

/// Local slot helpers. Slot k of triangle t names vertex `3t+k`, the edge
/// opposite that vertex, and the neighbor across that edge: edge (v0,v1) is
/// slot 2, edge (v1,v2) is slot 0 and edge (v2,v0) is slot 1.
constexpr int next_slot(int k) { return k == 2 ? 0 : k + 1; }
constexpr int prev_slot(int k) { return k == 0 ? 2 : k - 1; }

/// Immutable indexed triangulation: flat vertex, triangle and neighbor arrays.
///
/// Triangles are stored ccw. The neighbor array follows the slot convention
/// above, so walking slots 0, 1, 2 of a triangle visits its edges and
/// neighbors in ccw order.
class Triangulation {
 public:
  Triangulation() = default;

  /// Builds a validated triangulation. Triangles given cw are flipped to ccw
  /// (neighbor slots remapped accordingly). When `neighbors` is absent it is
  /// reconstructed from the triangle array.
  ///
  /// Throws GeometryError for zero-area triangles or duplicate points and
  /// TopologyError for out-of-range indices or non-manifold connectivity.
  static Triangulation build(std::vector<double> vertices, std::vector<Index> triangles,
                             std::optional<std::vector<Index>> neighbors = std::nullopt,
                             std::vector<std::uint8_t> constrained_vertex_flags = {});

  /// Wraps the arrays verbatim with no checks. Intended for tests that need a
  /// deliberately broken instance to feed to `validate`.
  static Triangulation from_raw(std::vector<double> vertices, std::vector<Index> triangles,
                                std::vector<Index> neighbors,
                                std::vector<std::uint8_t> constrained_vertex_flags = {});

  Index vertex_count() const { return static_cast<Index>(vertices_.size() / 2); }
  Index triangle_count() const { return static_cast<Index>(triangles_.size() / 3); }

  std::span<const double> vertices() const { return vertices_; }
  std::span<const Index> triangles() const { return triangles_; }
  std::span<const Index> neighbors() const { return neighbors_; }
  std::span<const std::uint8_t> constrained_vertex_flags() const { return constrained_; }

  Point point(Index v) const { return {vertices_[2 * v], vertices_[2 * v + 1]}; }
  Index vertex(Index t, int slot) const { return triangles_[3 * t + slot]; }
  Index neighbor(Index t, int slot) const { return neighbors_[3 * t + slot]; }
  bool is_boundary(Index t, int slot) const { return neighbor(t, slot) == kNoNeighbor; }

  /// The edge at `slot`, oriented as traversed ccw by triangle t.
  std::pair<Index, Index> directed_edge(Index t, int slot) const {
    return {vertex(t, next_slot(slot)), vertex(t, prev_slot(slot))};
  }
  EdgeKey edge_key(Index t, int slot) const {
    auto [a, b] = directed_edge(t, slot);
    return EdgeKey::of(a, b);
  }

  /// Slot of triangle t occupied by vertex v, or -1.
  int slot_of_vertex(Index t, Index v) const;
  /// Slot of triangle t whose neighbor is `other`, or -1.
  int slot_of_neighbor(Index t, Index other) const;

  double signed_area(Index t) const;
  double total_area() const;
  /// Smallest and largest interior angle over all triangles, in degrees.
  std::pair<double, double> angle_range() const;

 private:
  Triangulation(std::vector<double> vertices, std::vector<Index> triangles, std::vector<Index> neighbors,
                std::vector<std::uint8_t> flags)
      : vertices_(std::move(vertices)),
        triangles_(std::move(triangles)),
        neighbors_(std::move(neighbors)),
        constrained_(std::move(flags)) {}

  std::vector<double> vertices_;
  std::vector<Index> triangles_;
  std::vector<Index> neighbors_;
  std::vector<std::uint8_t> constrained_;
};

/// Canonical key and squared length of the edge at (t, slot).
/// Throws std::out_of_range for an invalid triangle or slot.
std::pair<EdgeKey, double> edge_geometry(const Triangulation& tri, Index t, int slot);

/// Reconstructs the neighbor array for a ccw triangle array. Throws
/// TopologyError when an edge is shared by more than two triangles.
std::vector<Index> build_neighbors(std::span<const Index> triangles);

/// Flips cw triangles to ccw in place, swapping slots 1 and 2 of both arrays
/// (`neighbors` may be empty). Zero-area triangles are left untouched.
/// Returns the number of triangles flipped.
std::size_t normalize_orientation(std::span<const double> vertices, std::span<Index> triangles,
                                  std::span<Index> neighbors);

struct Violation {
  enum class Kind {
    IndexOutOfRange,
    RepeatedVertex,
    NonPositiveArea,
    NeighborOutOfRange,
    AsymmetricNeighbor,
    NonManifoldEdge,
    InconsistentOrientation,
    DuplicatePoint,
  };
  Kind kind;
  Index triangle;  // offending triangle, or the vertex for DuplicatePoint
  std::string message;
};

using ValidationReport = std::vector<Violation>;

/// Checks every structural invariant. An empty report means valid.
ValidationReport validate(const Triangulation& tri);

const char* to_string(Violation::Kind kind);

/// Contents of Triangle-format `.node`, `.ele` and `.neigh` files.
struct TriangleFiles {
  std::string node;
  std::string ele;
  std::string neigh;
};

/// Parses Triangle-format text. Index base (0 or 1) is detected per file from
/// its first record. `.node` boundary markers populate the constrained-vertex
/// flags (non-zero marker means constrained).
Triangulation load_triangle_files(std::string_view node_text, std::string_view ele_text,
                                  std::optional<std::string_view> neigh_text = std::nullopt);

/// Serializes with the given index base; coordinates use 17 significant
/// digits so that reloading is exact.
TriangleFiles write_triangle_files(const Triangulation& tri, int index_base = 1);

}  // namespace polylla
