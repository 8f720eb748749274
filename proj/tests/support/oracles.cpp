#include "oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oracle {

namespace {

using Q = boost::multiprecision::cpp_rational;

Q sq_len(const Triangulation& tri, EdgeKey e) {
  const Point a = tri.point(e.lo), b = tri.point(e.hi);
  const Q dx = Q(b.x) - Q(a.x), dy = Q(b.y) - Q(a.y);
  return dx * dx + dy * dy;
}

Q orient(Point a, Point b, Point c) {
  return (Q(b.x) - Q(a.x)) * (Q(c.y) - Q(a.y)) - (Q(b.y) - Q(a.y)) * (Q(c.x) - Q(a.x));
}

int incircle_sign(Point a, Point b, Point c, Point d) {
  const Q adx = Q(a.x) - Q(d.x), ady = Q(a.y) - Q(d.y);
  const Q bdx = Q(b.x) - Q(d.x), bdy = Q(b.y) - Q(d.y);
  const Q cdx = Q(c.x) - Q(d.x), cdy = Q(c.y) - Q(d.y);
  const Q det = (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy) - (bdx * bdx + bdy * bdy) * (adx * cdy - cdx * ady) +
                (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

std::array<Index, 3> corners(const Triangulation& tri, Index t) {
  return {tri.triangles()[3 * t], tri.triangles()[3 * t + 1], tri.triangles()[3 * t + 2]};
}

std::array<EdgeKey, 3> keys(const Triangulation& tri, Index t) {
  const auto v = corners(tri, t);
  return {EdgeKey::of(v[0], v[1]), EdgeKey::of(v[1], v[2]), EdgeKey::of(v[2], v[0])};
}

}  // namespace

std::map<EdgeKey, std::vector<Index>> edge_map(const Triangulation& tri) {
  std::map<EdgeKey, std::vector<Index>> m;
  for (Index t = 0; t < tri.triangle_count(); ++t)
    for (EdgeKey k : keys(tri, t)) m[k].push_back(t);
  return m;
}

std::vector<EdgeKey> longest_keys(const Triangulation& tri) {
  std::vector<EdgeKey> out;
  for (Index t = 0; t < tri.triangle_count(); ++t) {
    auto ks = keys(tri, t);
    EdgeKey best = ks[0];
    Q best_len = sq_len(tri, best);
    for (int i = 1; i < 3; ++i) {
      const Q len = sq_len(tri, ks[i]);
      if (len > best_len || (len == best_len && best < ks[i])) {
        best = ks[i];
        best_len = len;
      }
    }
    out.push_back(best);
  }
  return out;
}

std::vector<EdgeKey> terminal_of(const Triangulation& tri) {
  const auto emap = edge_map(tri);
  const auto longest = longest_keys(tri);
  std::vector<EdgeKey> out;
  for (Index start = 0; start < tri.triangle_count(); ++start) {
    Index t = start;
    for (Index step = 0;; ++step) {
      if (step > tri.triangle_count()) throw std::runtime_error("oracle: path does not terminate");
      const EdgeKey e = longest[t];
      const auto& inc = emap.at(e);
      if (inc.size() == 1) {
        out.push_back(e);
        break;
      }
      const Index u = inc[0] == t ? inc[1] : inc[0];
      if (longest[u] == e) {
        out.push_back(e);
        break;
      }
      t = u;
    }
  }
  return out;
}

std::vector<int> regions(const Triangulation& tri) {
  std::map<EdgeKey, int> ids;
  std::vector<int> out;
  for (EdgeKey e : terminal_of(tri)) {
    auto [it, fresh] = ids.emplace(e, static_cast<int>(ids.size()));
    out.push_back(it->second);
  }
  return out;
}

std::size_t region_count(const Triangulation& tri) {
  const auto t = terminal_of(tri);
  return std::set<EdgeKey>(t.begin(), t.end()).size();
}

bool same_partition(const std::vector<int>& a, const std::vector<Index>& b) {
  if (a.size() != b.size()) return false;
  std::map<int, Index> ab;
  std::map<Index, int> ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [x, fx] = ab.emplace(a[i], b[i]);
    auto [y, fy] = ba.emplace(b[i], a[i]);
    if (x->second != b[i] || y->second != a[i]) return false;
  }
  return true;
}

std::vector<EdgeKey> region_boundary(const Triangulation& tri, const std::vector<Index>& triangles) {
  return region_boundary(tri, edge_map(tri), longest_keys(tri), triangles);
}

std::vector<EdgeKey> region_boundary(const Triangulation& tri, const std::map<EdgeKey, std::vector<Index>>& emap,
                                     const std::vector<EdgeKey>& longest, const std::vector<Index>& triangles) {
  const std::set<Index> in(triangles.begin(), triangles.end());
  std::vector<EdgeKey> out;
  for (Index t : triangles) {
    for (EdgeKey k : keys(tri, t)) {
      const auto& inc = emap.at(k);
      if (inc.size() == 1) {
        out.push_back(k);
        continue;
      }
      const Index u = inc[0] == t ? inc[1] : inc[0];
      if (!in.count(u) || (longest[t] != k && longest[u] != k)) out.push_back(k);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t delaunay_violations(const Triangulation& tri) {
  std::size_t bad = 0;
  for (Index t = 0; t < tri.triangle_count(); ++t) {
    const auto v = corners(tri, t);
    const Point a = tri.point(v[0]), b = tri.point(v[1]), c = tri.point(v[2]);
    // Circumcircle in floating point only to skip points clearly outside.
    const double d = 2 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
    const double b2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
    const double c2 = (c.x - a.x) * (c.x - a.x) + (c.y - a.y) * (c.y - a.y);
    const double ux = ((c.y - a.y) * b2 - (b.y - a.y) * c2) / d;
    const double uy = ((b.x - a.x) * c2 - (c.x - a.x) * b2) / d;
    const double r2 = ux * ux + uy * uy;
    for (Index p = 0; p < tri.vertex_count(); ++p) {
      if (p == v[0] || p == v[1] || p == v[2]) continue;
      const Point q = tri.point(p);
      const double dx = q.x - a.x - ux, dy = q.y - a.y - uy;
      if (std::isfinite(r2) && dx * dx + dy * dy > r2 * (1 + 1e-6) + 1e-300) continue;
      if (incircle_sign(a, b, c, q) > 0) ++bad;
    }
  }
  return bad;
}

std::vector<Index> tips_by_scan(const std::vector<Index>& ids) {
  std::vector<Index> out;
  const std::size_t n = ids.size();
  if (n < 3) return out;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (p == q || ids[p] != ids[q]) continue;
        if ((p + 1) % n == j && (j + 1) % n == q) out.push_back(ids[j]);
      }
    }
  }
  return out;
}

double polygon_area(const Triangulation& tri, const std::vector<Index>& ids) {
  Q sum = 0;
  for (std::size_t j = 0; j < ids.size(); ++j) {
    const Point a = tri.point(ids[j]), b = tri.point(ids[(j + 1) % ids.size()]);
    sum += Q(a.x) * Q(b.y) - Q(a.y) * Q(b.x);
  }
  return static_cast<double>(sum / 2);
}

Triangulation flip_edges(const Triangulation& tri, std::size_t count, std::uint64_t seed) {
  std::vector<double> v(tri.vertices().begin(), tri.vertices().end());
  std::vector<Index> t(tri.triangles().begin(), tri.triangles().end());
  std::mt19937_64 rng(seed);
  const Index m = tri.triangle_count();
  auto pt = [&](Index i) { return Point{v[2 * i], v[2 * i + 1]}; };
  std::size_t done = 0;
  for (std::size_t attempt = 0; attempt < 100 * count && done < count; ++attempt) {
    const auto nb = polylla::build_neighbors(t);
    const Index i = static_cast<Index>(rng() % static_cast<std::uint64_t>(m));
    const int k = static_cast<int>(rng() % 3);
    const Index j = nb[3 * i + k];
    if (j < 0) continue;
    const Index a = t[3 * i + k], u = t[3 * i + (k + 1) % 3], w = t[3 * i + (k + 2) % 3];
    Index b = -1;
    for (int s = 0; s < 3; ++s)
      if (t[3 * j + s] != u && t[3 * j + s] != w) b = t[3 * j + s];
    if (orient(pt(a), pt(u), pt(b)) <= 0 || orient(pt(a), pt(b), pt(w)) <= 0) continue;
    t[3 * i] = a, t[3 * i + 1] = u, t[3 * i + 2] = b;
    t[3 * j] = a, t[3 * j + 1] = b, t[3 * j + 2] = w;
    ++done;
  }
  return Triangulation::build(std::move(v), std::move(t));
}

OffMesh parse_off(const std::string& text) {
  std::istringstream in(text);
  std::string magic;
  in >> magic;
  if (magic != "OFF") throw std::runtime_error("not an OFF file");
  std::size_t nv = 0, nf = 0, ne = 0;
  in >> nv >> nf >> ne;
  OffMesh mesh;
  mesh.xyz.resize(3 * nv);
  for (auto& x : mesh.xyz) in >> x;
  for (std::size_t f = 0; f < nf; ++f) {
    std::size_t k = 0;
    in >> k;
    std::vector<Index> face(k);
    for (auto& i : face) in >> i;
    mesh.faces.push_back(std::move(face));
  }
  if (!in) throw std::runtime_error("truncated OFF file");
  return mesh;
}

}  // namespace oracle
