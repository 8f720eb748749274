#include "polylla/traversal.hpp"

#include "polylla/error.hpp"

#include <algorithm>
#include <thread>

namespace polylla {

bool Polyline::is_simple() const {
  std::vector<Index> ids = vertex_ids;
  std::sort(ids.begin(), ids.end());
  return std::adjacent_find(ids.begin(), ids.end()) == ids.end();
}

std::vector<Index> detect_tips(std::span<const Index> ids) {
  std::vector<Index> tips;
  const std::size_t n = ids.size();
  if (n < 3) return tips;
  for (std::size_t j = 0; j < n; ++j) {
    if (ids[(j + n - 1) % n] == ids[(j + 1) % n]) tips.push_back(ids[j]);
  }
  return tips;
}

PolygonWalker::PolygonWalker(const Triangulation& tri, const EdgeLabels& labels)
    : tri_(tri), labels_(labels), stamp_(static_cast<std::size_t>(tri.triangle_count()), 0) {}

void PolygonWalker::enter(Index t, std::span<std::uint8_t> visits, Polyline& out) {
  if (++visits[t] > 3)
    throw InternalError("triangle " + std::to_string(t) + " entered more than 3 times while building a polygon");
  if (stamp_[t] != walk_) {
    stamp_[t] = walk_;
    out.source_triangles.push_back(t);
  }
}

Polyline PolygonWalker::build(Index seed, std::span<std::uint8_t> visits) {
  if (++walk_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    walk_ = 1;
  }
  Polyline out;
  enter(seed, visits, out);

  const int fc = labels_.frontier_count(seed);
  if (fc == 3) {
    out.vertex_ids = {tri_.vertex(seed, 0), tri_.vertex(seed, 1), tri_.vertex(seed, 2)};
    return out;
  }

  // Half-edge (t, k) runs from vertex(t, k+1) to vertex(t, k+2).
  Index t = seed;
  int k = 0;
  Index v_init = kNoNeighbor;
  if (fc == 2) {
    while (!(labels_.is_frontier(seed, k) && labels_.is_frontier(seed, next_slot(k)))) ++k;
  } else if (fc == 1) {
    while (!labels_.is_frontier(seed, k)) ++k;
  } else {
    // No frontier edge: start at the seed's lowest vertex and rotate inside
    // the region until an outgoing frontier edge appears.
    int j = 0;
    for (int s = 1; s < 3; ++s)
      if (tri_.vertex(seed, s) < tri_.vertex(seed, j)) j = s;
    v_init = tri_.vertex(seed, j);
    k = prev_slot(j);
    while (!labels_.is_frontier(t, k)) {
      t = tri_.neighbor(t, k);
      enter(t, visits, out);
      k = prev_slot(tri_.slot_of_vertex(t, v_init));
    }
  }
  const Index t0 = t;
  const int k0 = k;

  const std::size_t limit = 3 * static_cast<std::size_t>(tri_.triangle_count()) + 3;
  for (std::size_t step = 0; step < limit; ++step) {
    out.vertex_ids.push_back(tri_.vertex(t, next_slot(k)));
    const Index b = tri_.vertex(t, prev_slot(k));
    // Rotate around b through non-frontier edges to the next frontier edge
    // leaving b.
    k = next_slot(k);
    while (!labels_.is_frontier(t, k)) {
      const Index next = tri_.neighbor(t, k);
      if (next == seed && b == v_init) {
        out.tips = detect_tips(out.vertex_ids);
        return out;
      }
      t = next;
      enter(t, visits, out);
      k = prev_slot(tri_.slot_of_vertex(t, b));
    }
    if (t == t0 && k == k0) {
      out.tips = detect_tips(out.vertex_ids);
      return out;
    }
  }
  throw InternalError("polygon walk from seed " + std::to_string(seed) + " did not close");
}

Polyline build_polygon(const Triangulation& tri, const EdgeLabels& labels, Index seed) {
  std::vector<std::uint8_t> visits(static_cast<std::size_t>(tri.triangle_count()), 0);
  PolygonWalker walker(tri, labels);
  return walker.build(seed, visits);
}

std::vector<Index> TraversalResult::simple_ids() const {
  std::vector<Index> ids;
  for (std::size_t i = 0; i < polylines.size(); ++i)
    if (polylines[i].is_simple()) ids.push_back(static_cast<Index>(i));
  return ids;
}

std::vector<Index> TraversalResult::non_simple_ids() const {
  std::vector<Index> ids;
  for (std::size_t i = 0; i < polylines.size(); ++i)
    if (!polylines[i].is_simple()) ids.push_back(static_cast<Index>(i));
  return ids;
}

std::size_t TraversalResult::max_visits() const {
  return visits.empty() ? 0 : *std::max_element(visits.begin(), visits.end());
}

TraversalResult build_all(const Triangulation& tri, const EdgeLabels& labels, bool parallel) {
  TraversalResult result;
  const auto m = static_cast<std::size_t>(tri.triangle_count());
  const auto& seeds = labels.seeds;
  result.visits.assign(m, 0);
  result.polylines.resize(seeds.size());

  // Regions are disjoint, so workers never touch the same counter.
  auto work = [&](std::size_t begin, std::size_t end) {
    PolygonWalker walker(tri, labels);
    for (std::size_t i = begin; i < end; ++i) result.polylines[i] = walker.build(seeds[i], result.visits);
  };

  const unsigned hw = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  if (hw <= 1 || seeds.size() < 2 * hw) {
    work(0, seeds.size());
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(hw);
    const std::size_t chunk = (seeds.size() + hw - 1) / hw;
    for (unsigned w = 0; w < hw; ++w) {
      const std::size_t begin = std::min(seeds.size(), w * chunk);
      const std::size_t end = std::min(seeds.size(), begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  result.region_of.assign(m, kNoNeighbor);
  for (std::size_t i = 0; i < result.polylines.size(); ++i) {
    for (Index t : result.polylines[i].source_triangles) {
      if (result.region_of[t] != kNoNeighbor)
        throw InternalError("triangle " + std::to_string(t) + " belongs to two regions");
      result.region_of[t] = static_cast<Index>(i);
    }
  }
  return result;
}

}  // namespace polylla
