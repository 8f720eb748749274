#include "polylla/io_export.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace polylla {

void ExportOptions::check() const {
  if (precision < 6 || precision > 17) throw std::invalid_argument("precision must be between 6 and 17");
  if (!(svg_width > 0) || !(svg_height > 0)) throw std::invalid_argument("svg canvas must have positive size");
  if (!(svg_stroke_width >= 0)) throw std::invalid_argument("svg stroke width must be non-negative");
}

std::string format_number(double value, int precision) {
  char buf[64];
  const int len = std::snprintf(buf, sizeof buf, "%.*g", precision, value);
  std::string out(buf, static_cast<std::size_t>(len));
  if (out == "-0") out = "0";
  return out;
}

namespace {

void append_faces(std::string& out, const PolyMesh& mesh) {
  for (std::size_t i = 0; i < mesh.polygon_count(); ++i) {
    const auto ids = mesh.polygon(i);
    out += std::to_string(ids.size());
    for (Index v : ids) {
      out += ' ';
      out += std::to_string(v);
    }
    out += '\n';
  }
}

}  // namespace

std::string write_off(const PolyMesh& mesh, const ExportOptions& options) {
  options.check();
  const std::size_t nv = mesh.vertices.size() / 2;
  std::string out = "OFF\n" + std::to_string(nv) + ' ' + std::to_string(mesh.polygon_count()) + " 0\n";
  for (std::size_t v = 0; v < nv; ++v) {
    out += format_number(mesh.vertices[2 * v], options.precision) + ' ' +
           format_number(mesh.vertices[2 * v + 1], options.precision) + " 0\n";
  }
  append_faces(out, mesh);
  return out;
}

std::string write_vtk(const PolyMesh& mesh, const ExportOptions& options) {
  options.check();
  const std::size_t nv = mesh.vertices.size() / 2;
  std::string out = "# vtk DataFile Version 2.0\npolylla mesh\nASCII\nDATASET POLYDATA\n";
  out += "POINTS " + std::to_string(nv) + " double\n";
  for (std::size_t v = 0; v < nv; ++v) {
    out += format_number(mesh.vertices[2 * v], options.precision) + ' ' +
           format_number(mesh.vertices[2 * v + 1], options.precision) + " 0\n";
  }
  out += "POLYGONS " + std::to_string(mesh.polygon_count()) + ' ' + std::to_string(mesh.mesh_array.size()) + '\n';
  append_faces(out, mesh);
  return out;
}

std::string write_svg(const PolyMesh& mesh, const ExportOptions& options, std::span<const std::string> fills) {
  options.check();
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
  double x1 = -x0, y1 = -x0;
  for (std::size_t i = 0; i < mesh.polygon_count(); ++i) {
    for (Index v : mesh.polygon(i)) {
      const Point p = mesh.point(v);
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
  }
  if (mesh.polygon_count() == 0) x0 = y0 = 0, x1 = y1 = 1;
  const double mx = 0.02 * std::max(x1 - x0, 1e-300);
  const double my = 0.02 * std::max(y1 - y0, 1e-300);
  const int prec = options.precision;
  // Flipping y maps a point (x, y) to (x, -y); the viewBox is taken in the
  // flipped frame.
  const double vx = x0 - mx, vy = -(y1 + my), vw = (x1 - x0) + 2 * mx, vh = (y1 - y0) + 2 * my;
  const double stroke = options.svg_stroke_width * std::max(vw / options.svg_width, vh / options.svg_height);

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + format_number(options.svg_width, 6) +
         "\" height=\"" + format_number(options.svg_height, 6) + "\" viewBox=\"" + format_number(vx, prec) + ' ' +
         format_number(vy, prec) + ' ' + format_number(vw, prec) + ' ' + format_number(vh, prec) + "\">\n";
  out += "<g stroke=\"black\" stroke-width=\"" + format_number(stroke, prec) +
         "\" stroke-linejoin=\"round\" fill=\"none\">\n";
  for (std::size_t i = 0; i < mesh.polygon_count(); ++i) {
    out += "<path d=\"";
    const auto ids = mesh.polygon(i);
    for (std::size_t j = 0; j < ids.size(); ++j) {
      const Point p = mesh.point(ids[j]);
      out += j ? " L" : "M";
      out += format_number(p.x, prec) + ' ' + format_number(p.y == 0 ? 0.0 : -p.y, prec);
    }
    out += " Z\"";
    if (!fills.empty()) out += " fill=\"" + fills[i % fills.size()] + '"';
    out += "/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string write_meshtxt(const PolyMesh& mesh) {
  std::string out;
  append_faces(out, mesh);
  return out;
}

std::string write_stats_json(const MeshStats& s, const std::optional<PhaseTimes>& t) {
  nlohmann::ordered_json j;
  j["input_points"] = s.input_points;
  j["triangle_count"] = s.triangle_count;
  j["region_count"] = s.region_count;
  j["polygon_count"] = s.polygon_count;
  j["tip_count"] = s.tip_count;
  j["max_tips_in_one_polygon"] = s.max_tips_in_one_polygon;
  j["avg_triangles_per_polygon"] = s.avg_triangles_per_polygon;
  j["avg_vertices_per_polygon"] = s.avg_vertices_per_polygon;
  j["min_interior_angle"] = s.min_interior_angle;
  j["max_interior_angle"] = s.max_interior_angle;
  j["triangulation_min_angle"] = s.triangulation_min_angle;
  j["triangulation_max_angle"] = s.triangulation_max_angle;
  if (t) {
    j["time_label"] = t->label;
    j["time_traversal"] = t->traversal;
    j["time_repair"] = t->repair;
    j["time_total"] = t->total;
  }
  return j.dump(2) + '\n';
}

}  // namespace polylla
