#include "polylla/generator.hpp"

#include "polylla/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace polylla {

std::vector<double> interleave(std::span<const Point> points) {
  std::vector<double> out;
  out.reserve(2 * points.size());
  for (const auto& p : points) {
    out.push_back(p.x);
    out.push_back(p.y);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random point sets

namespace {

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    const auto hx = std::bit_cast<std::uint64_t>(p.x);
    const auto hy = std::bit_cast<std::uint64_t>(p.y);
    return std::hash<std::uint64_t>{}(hx * 0x9E3779B97F4A7C15ull ^ hy);
  }
};

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double snap(double v, double lo, double hi, double gamma) {
  if (v - lo < gamma) return lo;
  if (hi - v < gamma) return hi;
  return v;
}

}  // namespace

std::vector<Point> random_points(const PointSetSpec& spec) {
  if (spec.count < 3) throw std::invalid_argument("point count must be at least 3");
  if (!(spec.side > 0.0)) throw std::invalid_argument("square side must be positive");
  const double gamma = spec.effective_gamma();
  if (!(gamma < spec.side / 2)) throw std::invalid_argument("gamma must be smaller than half the side");

  const double x0 = spec.min_x, y0 = spec.min_y;
  const double x1 = x0 + spec.side, y1 = y0 + spec.side;

  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(spec.count) + 4);
  pts.push_back({x0, y0});
  pts.push_back({x1, y0});
  pts.push_back({x1, y1});
  pts.push_back({x0, y1});
  std::unordered_set<Point, PointHash> seen(pts.begin(), pts.end());
  seen.reserve(pts.capacity());

  std::mt19937_64 rng(spec.seed);
  while (static_cast<std::int64_t>(pts.size()) < spec.count + 4) {
    Point p{x0 + spec.side * unit_double(rng), y0 + spec.side * unit_double(rng)};
    p.x = snap(p.x, x0, x1, gamma);
    p.y = snap(p.y, y0, y1, gamma);
    if (seen.insert(p).second) pts.push_back(p);
  }
  return pts;
}

// ---------------------------------------------------------------------------
// Delaunay triangulation

namespace {

std::uint64_t hilbert_index(std::uint32_t x, std::uint32_t y, int order) {
  std::uint64_t d = 0;
  for (std::uint32_t s = 1u << (order - 1); s > 0; s >>= 1) {
    const std::uint32_t rx = (x & s) ? 1 : 0;
    const std::uint32_t ry = (y & s) ? 1 : 0;
    d += static_cast<std::uint64_t>(s) * s * ((3 * rx) ^ ry);
    if (ry == 0) {
      if (rx == 1) {
        x = s - 1 - x;
        y = s - 1 - y;
      }
      std::swap(x, y);
    }
  }
  return d;
}

class Builder {
 public:
  explicit Builder(std::span<const Point> pts) : pts_(pts), inf_(static_cast<Index>(pts.size())) {}

  Triangulation run() {
    const auto order = insertion_order();
    const Index a = order[0], b = order[1];
    std::size_t ci = 2;
    while (ci < order.size() && orient2d(pts_[a], pts_[b], pts_[order[ci]]) == 0) ++ci;
    if (ci == order.size()) throw GeometryError("all points are collinear");
    start(a, b, order[ci]);

    for (std::size_t i = 2; i < order.size(); ++i) {
      if (i != ci) insert(order[i]);
    }
    return extract();
  }

 private:
  using Tri = std::array<Index, 3>;

  std::vector<Index> insertion_order() const {
    const auto n = pts_.size();
    std::vector<Index> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](Index i, Index j) {
      return pts_[i].x != pts_[j].x ? pts_[i].x < pts_[j].x : pts_[i].y < pts_[j].y;
    });
    for (std::size_t i = 1; i < n; ++i) {
      if (pts_[idx[i]] == pts_[idx[i - 1]])
        throw GeometryError("duplicate points " + std::to_string(std::min(idx[i], idx[i - 1])) + " and " +
                            std::to_string(std::max(idx[i], idx[i - 1])));
    }

    double lx = pts_[0].x, hx = lx, ly = pts_[0].y, hy = ly;
    for (const auto& p : pts_) {
      lx = std::min(lx, p.x), hx = std::max(hx, p.x);
      ly = std::min(ly, p.y), hy = std::max(hy, p.y);
    }
    constexpr int kOrder = 16;
    constexpr double kCells = (1 << kOrder) - 1;
    const double sx = hx > lx ? kCells / (hx - lx) : 0.0;
    const double sy = hy > ly ? kCells / (hy - ly) : 0.0;
    std::vector<std::uint64_t> key(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto gx = static_cast<std::uint32_t>((pts_[i].x - lx) * sx);
      const auto gy = static_cast<std::uint32_t>((pts_[i].y - ly) * sy);
      key[i] = hilbert_index(gx, gy, kOrder);
    }
    std::sort(idx.begin(), idx.end(), [&](Index i, Index j) { return key[i] != key[j] ? key[i] < key[j] : i < j; });
    return idx;
  }

  bool is_ghost(Index t) const { return tv_[t][0] == inf_ || tv_[t][1] == inf_ || tv_[t][2] == inf_; }

  // Sign of the lifted in-circle test with ties broken by the smallest index.
  int perturbed_incircle(Index a, Index b, Index c, Index d) const {
    const int s = incircle(pts_[a], pts_[b], pts_[c], pts_[d]);
    if (s != 0) return s;
    const Index lowest = std::min({a, b, c, d});
    if (lowest == d) return orient2d(pts_[a], pts_[b], pts_[c]);
    if (lowest == a) return -orient2d(pts_[b], pts_[c], pts_[d]);
    if (lowest == b) return orient2d(pts_[c], pts_[d], pts_[a]);
    return -orient2d(pts_[d], pts_[a], pts_[b]);
  }

  bool strictly_between(Index u, Index w, Index p) const {
    const Point &a = pts_[u], &b = pts_[w], &q = pts_[p];
    if (a.x != b.x) return (a.x < q.x && q.x < b.x) || (b.x < q.x && q.x < a.x);
    return (a.y < q.y && q.y < b.y) || (b.y < q.y && q.y < a.y);
  }

  bool in_conflict(Index t, Index p) const {
    const Tri& v = tv_[t];
    for (int k = 0; k < 3; ++k) {
      if (v[k] != inf_) continue;
      const Index u = v[next_slot(k)], w = v[prev_slot(k)];
      const int o = orient2d(pts_[u], pts_[w], pts_[p]);
      return o > 0 || (o == 0 && strictly_between(u, w, p));
    }
    return perturbed_incircle(v[0], v[1], v[2], p) > 0;
  }

  Index add_triangle(Index a, Index b, Index c) {
    tv_.push_back({a, b, c});
    tn_.push_back({kNoNeighbor, kNoNeighbor, kNoNeighbor});
    mark_.push_back(0);
    return static_cast<Index>(tv_.size() - 1);
  }

  void link_fan(std::span<const Index> fan) {
    // Each fan triangle is (e0, e1, apex); slot 0 borders the triangle
    // starting at e1 and slot 1 the triangle ending at e0.
    for (Index t : fan) start_of_[tv_[t][0]] = t;
    for (Index t : fan) {
      const Index next = start_of_[tv_[t][1]];
      tn_[t][0] = next;
      tn_[next][1] = t;
    }
  }

  void start(Index a, Index b, Index c) {
    if (orient2d(pts_[a], pts_[b], pts_[c]) < 0) std::swap(b, c);
    start_of_.assign(pts_.size() + 1, kNoNeighbor);
    const Index t0 = add_triangle(a, b, c);
    std::array<Index, 3> ghosts{};
    for (int k = 0; k < 3; ++k) {
      const Index e0 = tv_[t0][next_slot(k)], e1 = tv_[t0][prev_slot(k)];
      ghosts[k] = add_triangle(e1, e0, inf_);
      tn_[ghosts[k]][2] = t0;
      tn_[t0][k] = ghosts[k];
    }
    link_fan(ghosts);
    last_ = t0;
  }

  Index locate(Index p) {
    Index t = last_;
    if (is_ghost(t)) {
      for (int k = 0; k < 3; ++k) {
        if (tv_[t][k] == inf_) {
          t = tn_[t][k];
          break;
        }
      }
    }
    const std::size_t limit = 4 * tv_.size() + 16;
    int offset = 0;
    for (std::size_t steps = 0; steps < limit; ++steps) {
      bool moved = false;
      for (int i = 0; i < 3 && !moved; ++i) {
        const int k = (i + offset) % 3;
        const Index u = tv_[t][next_slot(k)], w = tv_[t][prev_slot(k)];
        if (orient2d(pts_[u], pts_[w], pts_[p]) < 0) {
          t = tn_[t][k];
          if (is_ghost(t)) return t;
          moved = true;
        }
      }
      if (!moved) {
        for (int k = 0; k < 3; ++k) {
          if (pts_[tv_[t][k]] == pts_[p]) throw GeometryError("duplicate point " + std::to_string(p));
        }
        return t;
      }
      offset = (offset + 1) % 3;
    }
    throw InternalError("point location did not terminate");
  }

  void insert(Index p) {
    const Index seed = locate(p);
    ++epoch_;
    cavity_.clear();
    boundary_.clear();
    cavity_.push_back(seed);
    mark_[seed] = epoch_;
    for (std::size_t i = 0; i < cavity_.size(); ++i) {
      const Index t = cavity_[i];
      for (int k = 0; k < 3; ++k) {
        const Index nb = tn_[t][k];
        if (mark_[nb] == epoch_) continue;
        if (mark_[nb] != -epoch_ && in_conflict(nb, p)) {
          mark_[nb] = epoch_;
          cavity_.push_back(nb);
        } else {
          mark_[nb] = -epoch_;
          boundary_.push_back({t, k});
        }
      }
    }

    // Read every boundary edge before cavity slots get overwritten.
    rim_.clear();
    for (const auto& [t, k] : boundary_) {
      const Index e0 = tv_[t][next_slot(k)], e1 = tv_[t][prev_slot(k)];
      if (e0 != inf_ && e1 != inf_ && orient2d(pts_[e0], pts_[e1], pts_[p]) <= 0)
        throw InternalError("cavity is not star-shaped around point " + std::to_string(p));
      rim_.push_back({e0, e1, tn_[t][k], t});
    }

    fan_.clear();
    std::size_t reuse = 0;
    for (const auto& [e0, e1, outside, old] : rim_) {
      Index nt;
      if (reuse < cavity_.size()) {
        nt = cavity_[reuse++];
        tv_[nt] = {e0, e1, p};
        tn_[nt] = {kNoNeighbor, kNoNeighbor, outside};
      } else {
        nt = add_triangle(e0, e1, p);
        tn_[nt][2] = outside;
      }
      for (int j = 0; j < 3; ++j)
        if (tn_[outside][j] == old && tv_[outside][next_slot(j)] == e1) tn_[outside][j] = nt;
      fan_.push_back(nt);
    }
    if (reuse != cavity_.size()) throw InternalError("cavity retriangulation lost triangles");
    link_fan(fan_);

    last_ = fan_.front();
    for (Index t : fan_) {
      if (!is_ghost(t)) {
        last_ = t;
        break;
      }
    }
  }

  Triangulation extract() const {
    std::vector<Index> remap(tv_.size(), kNoNeighbor);
    Index m = 0;
    for (std::size_t t = 0; t < tv_.size(); ++t)
      if (!is_ghost(static_cast<Index>(t))) remap[t] = m++;
    std::vector<Index> tris, nbrs;
    tris.reserve(3 * static_cast<std::size_t>(m));
    nbrs.reserve(3 * static_cast<std::size_t>(m));
    for (std::size_t t = 0; t < tv_.size(); ++t) {
      if (remap[t] == kNoNeighbor) continue;
      for (int k = 0; k < 3; ++k) {
        tris.push_back(tv_[t][k]);
        nbrs.push_back(remap[tn_[t][k]]);
      }
    }
    return Triangulation::build(interleave(pts_), std::move(tris), std::move(nbrs));
  }

  std::span<const Point> pts_;
  Index inf_;
  std::vector<Tri> tv_;
  std::vector<Tri> tn_;
  std::vector<std::int64_t> mark_;
  std::int64_t epoch_ = 0;
  std::vector<Index> start_of_;
  std::vector<Index> cavity_;
  std::vector<std::pair<Index, int>> boundary_;
  std::vector<std::array<Index, 4>> rim_;
  std::vector<Index> fan_;
  Index last_ = 0;
};

}  // namespace

Triangulation delaunay(std::span<const Point> points) {
  if (points.size() < 3) throw GeometryError("at least 3 points are required");
  return Builder(points).run();
}

}  // namespace polylla
