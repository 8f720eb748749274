#include "polylla/labeling.hpp"

#include "polylla/error.hpp"

#include <algorithm>

namespace polylla {

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Frontier: return "frontier";
    case EdgeClass::Internal: return "internal";
    case EdgeClass::Terminal: return "terminal";
    case EdgeClass::BoundaryTerminal: return "boundary-terminal";
  }
  return "unknown";
}

bool edge_less(const Triangulation& tri, EdgeKey a, EdgeKey b) {
  const int c = compare_squared_distance(tri.point(a.lo), tri.point(a.hi), tri.point(b.lo), tri.point(b.hi));
  if (c != 0) return c < 0;
  return a < b;
}

std::optional<Index> EdgeLabels::find(EdgeKey key) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), key,
                             [](const std::pair<EdgeKey, Index>& e, const EdgeKey& k) { return e.first < k; });
  if (it == sorted_.end() || it->first != key) return std::nullopt;
  return it->second;
}

std::optional<EdgeClass> EdgeLabels::class_of(EdgeKey key) const {
  if (auto id = find(key)) return edge_class[*id];
  return std::nullopt;
}

std::size_t EdgeLabels::count(EdgeClass c) const { return std::count(edge_class.begin(), edge_class.end(), c); }

std::vector<std::uint8_t> longest_edges(const Triangulation& tri) {
  std::vector<std::uint8_t> out(tri.triangle_count());
  for (Index t = 0; t < tri.triangle_count(); ++t) {
    int best = 0;
    EdgeKey best_key = tri.edge_key(t, 0);
    for (int k = 1; k < 3; ++k) {
      const EdgeKey key = tri.edge_key(t, k);
      if (edge_less(tri, best_key, key)) {
        best = k;
        best_key = key;
      }
    }
    out[t] = static_cast<std::uint8_t>(best);
  }
  return out;
}

EdgeLabels classify_edges(const Triangulation& tri, std::vector<std::uint8_t> longest_slot) {
  const Index m = tri.triangle_count();
  EdgeLabels labels;
  labels.longest_slot = std::move(longest_slot);
  labels.edge_of_slot.assign(3 * static_cast<std::size_t>(m), kNoNeighbor);
  labels.edges.reserve(3 * static_cast<std::size_t>(m) / 2 + 2);
  labels.edge_class.reserve(labels.edges.capacity());

  for (Index t = 0; t < m; ++t) {
    for (int k = 0; k < 3; ++k) {
      const Index nb = tri.neighbor(t, k);
      const bool longest_here = labels.longest_slot[t] == k;
      if (nb != kNoNeighbor && nb < t) {
        const int back = tri.slot_of_neighbor(nb, t);
        labels.edge_of_slot[3 * t + k] = labels.edge_of_slot[3 * nb + back];
        continue;
      }
      const auto id = static_cast<Index>(labels.edges.size());
      labels.edge_of_slot[3 * t + k] = id;
      labels.edges.push_back(tri.edge_key(t, k));
      EdgeClass c;
      if (nb == kNoNeighbor) {
        c = longest_here ? EdgeClass::BoundaryTerminal : EdgeClass::Frontier;
      } else {
        const bool longest_there = labels.longest_slot[nb] == tri.slot_of_neighbor(nb, t);
        if (longest_here && longest_there)
          c = EdgeClass::Terminal;
        else if (longest_here || longest_there)
          c = EdgeClass::Internal;
        else
          c = EdgeClass::Frontier;
      }
      labels.edge_class.push_back(c);
    }
  }

  labels.sorted_.reserve(labels.edges.size());
  for (Index e = 0; e < labels.edge_count(); ++e) labels.sorted_.emplace_back(labels.edges[e], e);
  std::sort(labels.sorted_.begin(), labels.sorted_.end());
  return labels;
}

std::vector<Index> collect_seeds(const Triangulation& tri, const EdgeLabels& labels) {
  // The first slot that names an edge belongs to its smaller triangle index,
  // so scanning triangle slots in order and keeping the first occurrence of
  // each terminal edge yields both the smaller index and edge-id order.
  std::vector<Index> seeds;
  std::vector<bool> taken(labels.edges.size(), false);
  for (Index t = 0; t < tri.triangle_count(); ++t) {
    for (int k = 0; k < 3; ++k) {
      const Index e = labels.edge_id(t, k);
      const EdgeClass c = labels.edge_class[e];
      if ((c == EdgeClass::Terminal || c == EdgeClass::BoundaryTerminal) && !taken[e]) {
        taken[e] = true;
        seeds.push_back(t);
      }
    }
  }
  return seeds;
}

EdgeLabels label(const Triangulation& tri) {
  EdgeLabels labels = classify_edges(tri, longest_edges(tri));
  labels.seeds = collect_seeds(tri, labels);
  return labels;
}

LeppPath lepp(const Triangulation& tri, std::span<const std::uint8_t> longest_slot, Index t) {
  LeppPath path;
  const Index m = tri.triangle_count();
  for (Index steps = 0; steps <= m; ++steps) {
    path.triangles.push_back(t);
    const int k = longest_slot[t];
    const Index nb = tri.neighbor(t, k);
    if (nb == kNoNeighbor) {
      path.terminal_edge = tri.edge_key(t, k);
      return path;
    }
    if (longest_slot[nb] == tri.slot_of_neighbor(nb, t)) {
      path.terminal_edge = tri.edge_key(t, k);
      path.partner = nb;
      return path;
    }
    t = nb;
  }
  throw InternalError("longest-edge path did not terminate");
}

}  // namespace polylla
