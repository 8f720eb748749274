#include "polylla/triangulation.hpp"

#include "polylla/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace polylla {

int Triangulation::slot_of_vertex(Index t, Index v) const {
  for (int k = 0; k < 3; ++k)
    if (vertex(t, k) == v) return k;
  return -1;
}

int Triangulation::slot_of_neighbor(Index t, Index other) const {
  for (int k = 0; k < 3; ++k)
    if (neighbor(t, k) == other) return k;
  return -1;
}

double Triangulation::signed_area(Index t) const {
  return 0.5 * cross(point(vertex(t, 0)), point(vertex(t, 1)), point(vertex(t, 2)));
}

double Triangulation::total_area() const {
  double sum = 0.0;
  for (Index t = 0; t < triangle_count(); ++t) sum += signed_area(t);
  return sum;
}

std::pair<double, double> Triangulation::angle_range() const {
  double lo = 360.0, hi = 0.0;
  for (Index t = 0; t < triangle_count(); ++t) {
    for (int k = 0; k < 3; ++k) {
      const double a = corner_angle(point(vertex(t, prev_slot(k))), point(vertex(t, k)),
                                    point(vertex(t, next_slot(k))));
      lo = std::min(lo, a);
      hi = std::max(hi, a);
    }
  }
  return {lo, hi};
}

Triangulation Triangulation::from_raw(std::vector<double> vertices, std::vector<Index> triangles,
                                      std::vector<Index> neighbors, std::vector<std::uint8_t> flags) {
  return Triangulation(std::move(vertices), std::move(triangles), std::move(neighbors), std::move(flags));
}

Triangulation Triangulation::build(std::vector<double> vertices, std::vector<Index> triangles,
                                   std::optional<std::vector<Index>> neighbors,
                                   std::vector<std::uint8_t> flags) {
  if (vertices.size() % 2 != 0) throw GeometryError("vertex array has odd length");
  if (triangles.size() % 3 != 0) throw TopologyError("triangle array length is not a multiple of 3");
  const auto n = static_cast<Index>(vertices.size() / 2);
  const auto m = static_cast<Index>(triangles.size() / 3);
  if (!flags.empty() && flags.size() != static_cast<std::size_t>(n))
    throw TopologyError("constrained-vertex flag count does not match vertex count");

  for (std::size_t i = 0; i < triangles.size(); ++i) {
    if (triangles[i] < 0 || triangles[i] >= n)
      throw TopologyError("triangle " + std::to_string(i / 3) + " references vertex " +
                          std::to_string(triangles[i]) + " out of range");
  }
  auto pt = [&](Index v) { return Point{vertices[2 * v], vertices[2 * v + 1]}; };
  for (Index t = 0; t < m; ++t) {
    const Index* v = &triangles[3 * t];
    if (v[0] == v[1] || v[1] == v[2] || v[2] == v[0])
      throw GeometryError("triangle " + std::to_string(t) + " repeats a vertex");
    if (orient2d(pt(v[0]), pt(v[1]), pt(v[2])) == 0)
      throw GeometryError("triangle " + std::to_string(t) + " has zero area");
  }

  if (neighbors) {
    if (neighbors->size() != triangles.size())
      throw TopologyError("neighbor array length does not match triangle array");
    normalize_orientation(vertices, triangles, *neighbors);
  } else {
    normalize_orientation(vertices, triangles, {});
    neighbors = build_neighbors(triangles);
  }

  Triangulation tri(std::move(vertices), std::move(triangles), std::move(*neighbors), std::move(flags));
  auto report = validate(tri);
  if (!report.empty()) {
    const auto& first = report.front();
    const std::string msg = first.message + (report.size() > 1 ? " (and " + std::to_string(report.size() - 1) +
                                                                     " more violations)"
                                                               : "");
    if (first.kind == Violation::Kind::DuplicatePoint || first.kind == Violation::Kind::NonPositiveArea)
      throw GeometryError(msg);
    throw TopologyError(msg);
  }
  return tri;
}

std::pair<EdgeKey, double> edge_geometry(const Triangulation& tri, Index t, int slot) {
  if (t < 0 || t >= tri.triangle_count()) throw std::out_of_range("triangle index out of range");
  if (slot < 0 || slot > 2) throw std::out_of_range("edge slot must be 0, 1 or 2");
  const EdgeKey key = tri.edge_key(t, slot);
  return {key, squared_distance(tri.point(key.lo), tri.point(key.hi))};
}

std::vector<Index> build_neighbors(std::span<const Index> triangles) {
  struct HalfEdge {
    EdgeKey key;
    Index tri;
    int slot;
  };
  const auto m = static_cast<Index>(triangles.size() / 3);
  std::vector<HalfEdge> half;
  half.reserve(triangles.size());
  for (Index t = 0; t < m; ++t) {
    for (int k = 0; k < 3; ++k) {
      half.push_back({EdgeKey::of(triangles[3 * t + next_slot(k)], triangles[3 * t + prev_slot(k)]), t, k});
    }
  }
  std::sort(half.begin(), half.end(), [](const HalfEdge& a, const HalfEdge& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.tri != b.tri ? a.tri < b.tri : a.slot < b.slot;
  });

  std::vector<Index> neighbors(triangles.size(), kNoNeighbor);
  for (std::size_t i = 0; i < half.size();) {
    std::size_t j = i + 1;
    while (j < half.size() && half[j].key == half[i].key) ++j;
    if (j - i > 2) {
      throw TopologyError("edge (" + std::to_string(half[i].key.lo) + "," + std::to_string(half[i].key.hi) +
                          ") is shared by " + std::to_string(j - i) + " triangles");
    }
    if (j - i == 2) {
      neighbors[3 * half[i].tri + half[i].slot] = half[i + 1].tri;
      neighbors[3 * half[i + 1].tri + half[i + 1].slot] = half[i].tri;
    }
    i = j;
  }
  return neighbors;
}

std::size_t normalize_orientation(std::span<const double> vertices, std::span<Index> triangles,
                                  std::span<Index> neighbors) {
  std::size_t flipped = 0;
  auto pt = [&](Index v) { return Point{vertices[2 * v], vertices[2 * v + 1]}; };
  for (std::size_t t = 0; t + 2 < triangles.size(); t += 3) {
    if (orient2d(pt(triangles[t]), pt(triangles[t + 1]), pt(triangles[t + 2])) < 0) {
      std::swap(triangles[t + 1], triangles[t + 2]);
      if (!neighbors.empty()) std::swap(neighbors[t + 1], neighbors[t + 2]);
      ++flipped;
    }
  }
  return flipped;
}

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::IndexOutOfRange: return "index-out-of-range";
    case Violation::Kind::RepeatedVertex: return "repeated-vertex";
    case Violation::Kind::NonPositiveArea: return "non-positive-area";
    case Violation::Kind::NeighborOutOfRange: return "neighbor-out-of-range";
    case Violation::Kind::AsymmetricNeighbor: return "asymmetric-neighbor";
    case Violation::Kind::NonManifoldEdge: return "non-manifold-edge";
    case Violation::Kind::InconsistentOrientation: return "inconsistent-orientation";
    case Violation::Kind::DuplicatePoint: return "duplicate-point";
  }
  return "unknown";
}

ValidationReport validate(const Triangulation& tri) {
  ValidationReport report;
  const Index n = tri.vertex_count();
  const Index m = tri.triangle_count();
  auto add = [&](Violation::Kind kind, Index t, std::string msg) {
    report.push_back({kind, t, std::move(msg)});
  };
  auto ts = [](auto v) { return std::to_string(v); };

  if (tri.neighbors().size() != tri.triangles().size()) {
    add(Violation::Kind::NeighborOutOfRange, 0, "neighbor array length does not match triangle array");
    return report;
  }

  std::vector<bool> usable(m, true);
  for (Index t = 0; t < m; ++t) {
    bool in_range = true;
    for (int k = 0; k < 3; ++k) {
      const Index v = tri.vertex(t, k);
      if (v < 0 || v >= n) {
        add(Violation::Kind::IndexOutOfRange, t, "triangle " + ts(t) + " vertex " + ts(v) + " out of range");
        in_range = false;
      }
    }
    if (!in_range) {
      usable[t] = false;
      continue;
    }
    const Index a = tri.vertex(t, 0), b = tri.vertex(t, 1), c = tri.vertex(t, 2);
    if (a == b || b == c || c == a) {
      add(Violation::Kind::RepeatedVertex, t, "triangle " + ts(t) + " repeats a vertex index");
      usable[t] = false;
      continue;
    }
    if (orient2d(tri.point(a), tri.point(b), tri.point(c)) <= 0) {
      add(Violation::Kind::NonPositiveArea, t, "triangle " + ts(t) + " is not ccw with positive area");
    }
  }

  for (Index t = 0; t < m; ++t) {
    if (!usable[t]) continue;
    for (int k = 0; k < 3; ++k) {
      const Index j = tri.neighbor(t, k);
      if (j == kNoNeighbor) continue;
      if (j < 0 || j >= m || j == t) {
        add(Violation::Kind::NeighborOutOfRange, t, "triangle " + ts(t) + " slot " + ts(k) + " names invalid neighbor " + ts(j));
        continue;
      }
      if (!usable[j]) continue;
      const int back = tri.slot_of_neighbor(j, t);
      const EdgeKey key = tri.edge_key(t, k);
      if (back < 0 || tri.edge_key(j, back) != key) {
        add(Violation::Kind::AsymmetricNeighbor, t,
            "triangle " + ts(t) + " slot " + ts(k) + " names " + ts(j) + " which does not share edge (" +
                ts(key.lo) + "," + ts(key.hi) + ") back");
        continue;
      }
      if (tri.directed_edge(t, k) == tri.directed_edge(j, back)) {
        add(Violation::Kind::InconsistentOrientation, t,
            "triangles " + ts(t) + " and " + ts(j) + " traverse their shared edge in the same direction");
      }
    }
  }

  // Edge multiplicity, independent of the neighbor array.
  std::vector<std::pair<EdgeKey, Index>> edges;
  edges.reserve(3 * static_cast<std::size_t>(m));
  for (Index t = 0; t < m; ++t) {
    if (!usable[t]) continue;
    for (int k = 0; k < 3; ++k) edges.emplace_back(tri.edge_key(t, k), t);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i + 1;
    while (j < edges.size() && edges[j].first == edges[i].first) ++j;
    const EdgeKey key = edges[i].first;
    if (j - i > 2) {
      add(Violation::Kind::NonManifoldEdge, edges[i].second,
          "edge (" + ts(key.lo) + "," + ts(key.hi) + ") is shared by " + ts(j - i) + " triangles");
    } else if (j - i == 2) {
      const Index t0 = edges[i].second;
      const Index t1 = edges[i + 1].second;
      int k0 = 0;
      while (tri.edge_key(t0, k0) != key) ++k0;
      if (tri.neighbor(t0, k0) != t1) {
        add(Violation::Kind::AsymmetricNeighbor, t0,
            "interior edge (" + ts(key.lo) + "," + ts(key.hi) + ") is not linked between triangles " + ts(t0) +
                " and " + ts(t1));
      }
    }
    i = j;
  }

  // Exact duplicate coordinates.
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    const Point pa = tri.point(a), pb = tri.point(b);
    return pa.x != pb.x ? pa.x < pb.x : (pa.y != pb.y ? pa.y < pb.y : a < b);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (tri.point(order[i]) == tri.point(order[i - 1])) {
      add(Violation::Kind::DuplicatePoint, order[i],
          "vertices " + ts(order[i - 1]) + " and " + ts(order[i]) + " share coordinates");
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Triangle file format

namespace {

class LineReader {
 public:
  LineReader(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  /// Next non-empty, non-comment line split into tokens. False at end.
  bool next(std::vector<std::string_view>& tokens) {
    while (pos_ < text_.size()) {
      const std::size_t end = std::min(text_.find('\n', pos_), text_.size());
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      tokens.clear();
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::size_t line() const { return line_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_, what); }

  long long to_int(std::string_view tok) const {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) fail("expected integer, got '" + std::string(tok) + "'");
    return value;
  }

  double to_double(std::string_view tok) const {
    double value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) fail("expected number, got '" + std::string(tok) + "'");
    return value;
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == ','; }

  std::string_view text_;
  std::string source_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

std::vector<long long> read_header(LineReader& in, std::size_t min_fields, const char* what) {
  std::vector<std::string_view> tok;
  if (!in.next(tok)) in.fail(std::string("missing ") + what + " header");
  if (tok.size() < min_fields) in.fail(std::string("malformed ") + what + " header");
  std::vector<long long> out;
  for (auto t : tok) out.push_back(in.to_int(t));
  return out;
}

}  // namespace

Triangulation load_triangle_files(std::string_view node_text, std::string_view ele_text,
                                  std::optional<std::string_view> neigh_text) {
  std::vector<std::string_view> tok;

  LineReader node(node_text, ".node");
  const auto nh = read_header(node, 1, ".node");
  const long long n = nh[0];
  const long long dim = nh.size() > 1 ? nh[1] : 2;
  const long long nattr = nh.size() > 2 ? nh[2] : 0;
  const long long nmark = nh.size() > 3 ? nh[3] : 0;
  if (n < 0) node.fail("negative point count");
  if (dim != 2) node.fail("only 2-dimensional points are supported");
  if (nattr < 0 || nmark < 0 || nmark > 1) node.fail("invalid attribute or marker count");

  std::vector<double> vertices(2 * static_cast<std::size_t>(n));
  std::vector<std::uint8_t> flags(nmark ? static_cast<std::size_t>(n) : 0);
  long long node_base = -1;
  for (long long i = 0; i < n; ++i) {
    if (!node.next(tok)) node.fail("expected " + std::to_string(n) + " points, found " + std::to_string(i));
    if (static_cast<long long>(tok.size()) != 3 + nattr + nmark)
      node.fail("point row has " + std::to_string(tok.size()) + " fields, expected " +
                std::to_string(3 + nattr + nmark));
    const long long id = node.to_int(tok[0]);
    if (node_base < 0) {
      if (id != 0 && id != 1) node.fail("first point index must be 0 or 1");
      node_base = id;
    }
    if (id != i + node_base) node.fail("point index " + std::to_string(id) + " out of sequence");
    vertices[2 * i] = node.to_double(tok[1]);
    vertices[2 * i + 1] = node.to_double(tok[2]);
    if (nmark) flags[i] = node.to_int(tok[3 + nattr]) != 0;
  }
  if (node_base < 0) node_base = 0;

  LineReader ele(ele_text, ".ele");
  const auto eh = read_header(ele, 1, ".ele");
  const long long m = eh[0];
  const long long per = eh.size() > 1 ? eh[1] : 3;
  const long long eattr = eh.size() > 2 ? eh[2] : 0;
  if (m < 0) ele.fail("negative triangle count");
  if (per != 3) ele.fail("only 3-node triangles are supported");
  if (eattr < 0) ele.fail("invalid attribute count");

  std::vector<Index> triangles(3 * static_cast<std::size_t>(m));
  long long ele_base = -1;
  for (long long i = 0; i < m; ++i) {
    if (!ele.next(tok)) ele.fail("expected " + std::to_string(m) + " triangles, found " + std::to_string(i));
    if (static_cast<long long>(tok.size()) != 4 + eattr)
      ele.fail("triangle row has " + std::to_string(tok.size()) + " fields, expected " + std::to_string(4 + eattr));
    const long long id = ele.to_int(tok[0]);
    if (ele_base < 0) {
      if (id != 0 && id != 1) ele.fail("first triangle index must be 0 or 1");
      ele_base = id;
    }
    if (id != i + ele_base) ele.fail("triangle index " + std::to_string(id) + " out of sequence");
    for (int k = 0; k < 3; ++k) {
      const long long v = ele.to_int(tok[1 + k]) - node_base;
      if (v < 0 || v >= n) ele.fail("vertex index " + std::string(tok[1 + k]) + " out of range");
      triangles[3 * i + k] = static_cast<Index>(v);
    }
  }
  if (ele_base < 0) ele_base = 0;

  std::optional<std::vector<Index>> neighbors;
  if (neigh_text) {
    LineReader ng(*neigh_text, ".neigh");
    const auto gh = read_header(ng, 1, ".neigh");
    if (gh[0] != m) ng.fail("triangle count " + std::to_string(gh[0]) + " does not match .ele");
    if (gh.size() > 1 && gh[1] != 3) ng.fail("expected 3 neighbors per triangle");
    neighbors.emplace(3 * static_cast<std::size_t>(m));
    long long base = -1;
    for (long long i = 0; i < m; ++i) {
      if (!ng.next(tok)) ng.fail("expected " + std::to_string(m) + " rows, found " + std::to_string(i));
      if (tok.size() != 4) ng.fail("neighbor row must have 4 fields");
      const long long id = ng.to_int(tok[0]);
      if (base < 0) {
        if (id != 0 && id != 1) ng.fail("first triangle index must be 0 or 1");
        base = id;
      }
      if (id != i + base) ng.fail("triangle index " + std::to_string(id) + " out of sequence");
      for (int k = 0; k < 3; ++k) {
        const long long j = ng.to_int(tok[1 + k]);
        if (j == -1) {
          (*neighbors)[3 * i + k] = kNoNeighbor;
        } else {
          if (j - base < 0 || j - base >= m) ng.fail("neighbor index " + std::to_string(j) + " out of range");
          (*neighbors)[3 * i + k] = static_cast<Index>(j - base);
        }
      }
    }
  }

  return Triangulation::build(std::move(vertices), std::move(triangles), std::move(neighbors), std::move(flags));
}

namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
  out.append(buf, static_cast<std::size_t>(len));
}

}  // namespace

TriangleFiles write_triangle_files(const Triangulation& tri, int index_base) {
  if (index_base != 0 && index_base != 1) throw std::invalid_argument("index base must be 0 or 1");
  TriangleFiles files;
  const bool markers = !tri.constrained_vertex_flags().empty();

  auto& node = files.node;
  node += std::to_string(tri.vertex_count()) + " 2 0 " + (markers ? "1" : "0") + "\n";
  for (Index v = 0; v < tri.vertex_count(); ++v) {
    node += std::to_string(v + index_base);
    node += ' ';
    append_double(node, tri.point(v).x);
    node += ' ';
    append_double(node, tri.point(v).y);
    if (markers) node += tri.constrained_vertex_flags()[v] ? " 1" : " 0";
    node += '\n';
  }

  auto& ele = files.ele;
  ele += std::to_string(tri.triangle_count()) + " 3 0\n";
  auto& neigh = files.neigh;
  neigh += std::to_string(tri.triangle_count()) + " 3\n";
  for (Index t = 0; t < tri.triangle_count(); ++t) {
    ele += std::to_string(t + index_base);
    neigh += std::to_string(t + index_base);
    for (int k = 0; k < 3; ++k) {
      ele += ' ' + std::to_string(tri.vertex(t, k) + index_base);
      const Index nb = tri.neighbor(t, k);
      neigh += ' ' + std::to_string(nb == kNoNeighbor ? -1 : nb + index_base);
    }
    ele += '\n';
    neigh += '\n';
  }
  return files;
}

}  // namespace polylla
