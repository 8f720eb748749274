#pragma once

#include "polylla/polymesh.hpp"

#include <optional>
#include <span>
#include <string>

namespace polylla {

enum class ExportFormat { Off, Vtk, Svg, MeshTxt, StatsJson };

struct ExportOptions {
  ExportFormat format = ExportFormat::Off;
  int precision = 17;  ///< significant digits for coordinates, 6..17
  double svg_width = 1000;
  double svg_height = 1000;
  double svg_stroke_width = 0.5;  ///< in canvas units

  /// Throws std::invalid_argument when out of range.
  void check() const;
};

struct PhaseTimes {
  double label = 0;
  double traversal = 0;
  double repair = 0;
  double total = 0;
};

/// OFF: header, "V F 0", one "x y 0" line per vertex, then one face per
/// polygon.
std::string write_off(const PolyMesh& mesh, const ExportOptions& options = {});

/// Legacy VTK 2.0 ASCII POLYDATA with a POLYGONS section.
std::string write_vtk(const PolyMesh& mesh, const ExportOptions& options = {});

/// SVG 1.1, one closed path per polygon, y flipped so that +y points up, and
/// a 2% margin around the bounding box. `fills` is cycled over polygons;
/// when empty polygons are left unfilled.
std::string write_svg(const PolyMesh& mesh, const ExportOptions& options = {},
                      std::span<const std::string> fills = {});

/// One line per polygon: "k v0 v1 ... v(k-1)".
std::string write_meshtxt(const PolyMesh& mesh);

/// Flat JSON object: every MeshStats field plus time_label, time_traversal,
/// time_repair and time_total in seconds. The time fields are left out when
/// `times` is empty, which makes the output reproducible byte for byte.
std::string write_stats_json(const MeshStats& stats, const std::optional<PhaseTimes>& times);

/// Formats a double with `precision` significant digits, shortest form.
std::string format_number(double value, int precision = 17);

}  // namespace polylla
