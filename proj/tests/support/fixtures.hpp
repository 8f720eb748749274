#pragma once

#include "polylla/triangulation.hpp"

#include <string>

namespace fixture {

using polylla::Triangulation;

/// (0,0),(1,0),(1,1),(0,1) split along (0,2).
Triangulation unit_square();

/// (0,0),(1,0),(0,1).
Triangulation single_triangle();

/// Open fan of 5 triangles around vertex 0 with spokes 1.0 .. 1.5 at 60
/// degree steps. Each triangle's longest edge is the next spoke, and the last
/// spoke lies on the boundary, so the longest-edge path from triangle 0 runs
/// through all five.
Triangulation spiral_strip();

/// Closed fan of 6 triangles around vertex 0 with spokes 1.0 .. 1.5. Spoke
/// 0-1 is the longest edge of neither neighbor: a barrier edge with tip 0
/// inside a single region. Triangle i is (0, i+1, i+2 mod 6).
Triangulation spiral_fan();

/// Tip 0 with four spokes: three 62 degree triangles with growing spokes and
/// one flat 174 degree triangle whose long side is shared with an extra
/// triangle 4. Spoke 0-1 is the barrier; the tip has degree 3.
Triangulation four_spoke_tip();

/// Reads tests/data/<name>.node and .ele.
Triangulation load_data(const std::string& name);

std::string data_path(const std::string& file);

std::string read_text(const std::string& path);

}  // namespace fixture
