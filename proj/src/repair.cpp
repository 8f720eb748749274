#include "polylla/repair.hpp"

#include "polylla/error.hpp"

#include <algorithm>

namespace polylla {

Repairer::Repairer(const Triangulation& tri, EdgeLabels& labels)
    : tri_(tri),
      labels_(labels),
      walker_(tri, labels),
      aid_(static_cast<std::size_t>(tri.vertex_count()), kNoNeighbor),
      rotations_(static_cast<std::size_t>(tri.triangle_count()), 0),
      corners_(static_cast<std::size_t>(tri.triangle_count()), 0),
      pending_(static_cast<std::size_t>(tri.triangle_count()), 0),
      visits_(static_cast<std::size_t>(tri.triangle_count()), 0) {
  for (Index t = 0; t < tri.triangle_count(); ++t)
    for (int k = 0; k < 3; ++k) aid_[tri.vertex(t, k)] = t;
}

TipFan Repairer::fan(Index tip, Index barrier_end) {
  TipFan f;
  f.tip = tip;
  f.barrier_end = barrier_end;
  const Index start = aid_[tip];
  if (start == kNoNeighbor) throw InternalError("tip " + std::to_string(tip) + " has no incident triangle");

  // One ccw turn around the tip. In a triangle (tip, a, c) the next edge is
  // tip->c, stored at the slot after the tip's.
  std::vector<Index> ends;
  std::vector<std::pair<Index, int>> slots;
  Index t = start;
  const std::size_t cap = static_cast<std::size_t>(tri_.triangle_count()) + 1;
  for (std::size_t step = 0;; ++step) {
    if (step > cap) throw InternalError("rotation around vertex " + std::to_string(tip) + " did not close");
    max_rotation_visits_ = std::max<std::size_t>(max_rotation_visits_, ++rotations_[t]);
    const int s = tri_.slot_of_vertex(t, tip);
    ends.push_back(tri_.vertex(t, prev_slot(s)));
    slots.emplace_back(t, next_slot(s));
    const Index nb = tri_.neighbor(t, next_slot(s));
    if (nb == kNoNeighbor) {
      // A tip on the domain boundary would have two frontier edges.
      f.resolved = true;
      return f;
    }
    t = nb;
    if (t == start) break;
  }

  const auto at = std::find(ends.begin(), ends.end(), barrier_end);
  if (at == ends.end())
    throw InternalError("edge " + std::to_string(tip) + "-" + std::to_string(barrier_end) + " is not incident");
  const std::size_t n = ends.size();
  const std::size_t first = static_cast<std::size_t>(at - ends.begin()) + 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t j = (first + i) % n;
    if (labels_.is_frontier(slots[j].first, slots[j].second)) f.resolved = true;
    f.ends.push_back(ends[j]);
    f.slots.push_back(slots[j]);
  }
  return f;
}

std::optional<Promotion> Repairer::promote(const TipFan& f, std::span<const Index> avoid) {
  if (f.resolved) return std::nullopt;
  if (f.ends.empty())
    throw InternalError("tip " + std::to_string(f.tip) + " has no internal edge besides its barrier edge");
  const std::size_t deg = f.ends.size();
  std::size_t pick = (deg + 1) / 2 - 1;
  if (!avoid.empty()) {
    // Most central first, the lower of two equally central ones first.
    std::vector<std::size_t> order(deg);
    for (std::size_t i = 0; i < deg; ++i) order[i] = i;
    const auto off = [deg](std::size_t i) { return i * 2 > deg - 1 ? i * 2 - (deg - 1) : (deg - 1) - i * 2; };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return off(x) < off(y); });
    for (std::size_t i : order) {
      if (std::find(avoid.begin(), avoid.end(), f.ends[i]) == avoid.end()) {
        pick = i;
        break;
      }
    }
  }
  const auto [t, slot] = f.slots[pick];
  labels_.edge_class[labels_.edge_id(t, slot)] = EdgeClass::Frontier;
  Promotion p{tri_.edge_key(t, slot), t, tri_.neighbor(t, slot)};
  promoted_.push_back(p.edge);
  for (Index side : {p.t1, p.t2}) {
    pending_[side] = 1;
    queue_.push_back(side);
  }
  return p;
}

TipFan Repairer::corner(const Polyline& p, std::size_t j) {
  const auto& ids = p.vertex_ids;
  const std::size_t n = ids.size();
  const Index b = ids[j], a = ids[(j + n - 1) % n], c = ids[(j + 1) % n];
  TipFan f;
  f.tip = b;
  f.barrier_end = a;
  // The triangle left of b->c lies in the corner.
  Index t = kNoNeighbor;
  for (Index s : p.source_triangles) {
    const int k = tri_.slot_of_vertex(s, b);
    if (k >= 0 && tri_.vertex(s, next_slot(k)) == c) {
      t = s;
      break;
    }
  }
  if (t == kNoNeighbor)
    throw InternalError("edge " + std::to_string(b) + "-" + std::to_string(c) + " has no triangle in its polygon");
  for (std::size_t step = 0; step <= p.source_triangles.size(); ++step) {
    max_corner_visits_ = std::max<std::size_t>(max_corner_visits_, ++corners_[t]);
    const int s = tri_.slot_of_vertex(t, b);
    const Index end = tri_.vertex(t, prev_slot(s));
    if (end == a) return f;
    if (labels_.is_frontier(t, next_slot(s))) f.resolved = true;
    f.ends.push_back(end);
    f.slots.emplace_back(t, next_slot(s));
    t = tri_.neighbor(t, next_slot(s));
    if (t == kNoNeighbor) break;
  }
  throw InternalError("corner at vertex " + std::to_string(b) + " did not close");
}

void Repairer::promote_within(const Polyline& p) {
  const auto& ids = p.vertex_ids;
  const std::size_t n = ids.size();
  bool any = false;
  std::vector<Index> chain;
  for (std::size_t j = 0; j < n; ++j) {
    const Index a = ids[(j + n - 1) % n];
    if (a != ids[(j + 1) % n]) continue;
    // The barrier chain ending at this tip reads the same in both
    // directions. An edge from the tip back onto that chain would close a
    // loop that still touches the rest of the boundary, so avoid it.
    chain.assign(1, ids[j]);
    for (std::size_t i = 1; 2 * i < n && ids[(j + n - i) % n] == ids[(j + i) % n]; ++i) chain.push_back(ids[(j + i) % n]);
    any |= promote(fan(ids[j], a), chain).has_value();
  }
  if (any) return;

  // No tip left to promote, yet some vertex repeats: the boundary touches
  // itself. Split the widest corner at a repeated vertex; if every such
  // corner is a single triangle, split the widest corner of the shorter loop
  // between two occurrences instead.
  std::vector<Index> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  auto repeated = [&](Index v) {
    const auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), v);
    return hi - lo > 1;
  };
  std::optional<TipFan> best;
  auto consider = [&](std::size_t j) {
    TipFan f = corner(p, j);
    if (!f.resolved && !f.ends.empty() && (!best || f.ends.size() > best->ends.size())) best = std::move(f);
  };
  std::size_t at = n, next = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (!repeated(ids[j])) continue;
    consider(j);
    if (at == n) {
      at = j;
      next = static_cast<std::size_t>(std::find(ids.begin() + static_cast<std::ptrdiff_t>(j) + 1, ids.end(), ids[j]) -
                                      ids.begin());
    }
  }
  if (!best && at < n) {
    const bool inner = next - at <= n - (next - at);
    for (std::size_t j = 0; j < n; ++j)
      if (ids[j] != ids[at] && (j > at && j < next) == inner) consider(j);
  }
  if (!best) throw InternalError("non-simple polygon has no corner to split");
  ++pinches_;
  promote(*best);
}

std::vector<Polyline> Repairer::split_nonsimple(const Polyline& p) {
  std::vector<Polyline> pieces;
  queue_.clear();
  promote_within(p);
  const std::size_t cap = 8 * static_cast<std::size_t>(tri_.triangle_count()) + 8;
  for (std::size_t q = 0; q < queue_.size(); ++q) {
    if (q > cap) throw InternalError("repair did not terminate");
    const Index t = queue_[q];
    if (!pending_[t]) continue;
    Polyline piece = walker_.build(t, visits_);
    for (Index s : piece.source_triangles) pending_[s] = 0;
    if (!piece.is_simple()) {
      // Still not simple after this round: split it again.
      ++reentries_;
      for (Index s : piece.source_triangles) {
        visits_[s] = 0;
        pending_[s] = 1;
        queue_.push_back(s);
      }
      promote_within(piece);
      continue;
    }
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

RepairResult Repairer::run(const TraversalResult& traversal) {
  RepairResult out;
  promoted_.clear();
  reentries_ = 0;
  pinches_ = 0;
  for (std::size_t i = 0; i < traversal.polylines.size(); ++i) {
    const Polyline& p = traversal.polylines[i];
    if (p.is_simple()) {
      out.polygons.push_back(p);
      out.parent.push_back(static_cast<Index>(i));
      continue;
    }
    SplitRecord rec;
    rec.parent = static_cast<Index>(i);
    rec.tips = p.tips.size();
    for (Polyline& piece : split_nonsimple(p)) {
      out.polygons.push_back(std::move(piece));
      out.parent.push_back(rec.parent);
      ++rec.pieces;
    }
    out.splits.push_back(rec);
  }
  out.promoted = promoted_;
  out.max_rotation_visits = max_rotation_visits_;
  out.max_corner_visits = max_corner_visits_;
  out.reentries = reentries_;
  out.pinches = pinches_;
  return out;
}

RepairResult repair(const Triangulation& tri, EdgeLabels& labels, const TraversalResult& traversal) {
  Repairer r(tri, labels);
  return r.run(traversal);
}

}  // namespace polylla
