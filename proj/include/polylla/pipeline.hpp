#pragma once

#include "polylla/io_export.hpp"
#include "polylla/labeling.hpp"
#include "polylla/polymesh.hpp"
#include "polylla/repair.hpp"
#include "polylla/traversal.hpp"
#include "polylla/triangulation.hpp"

namespace polylla {

/// Everything produced by one run over a triangulation.
struct MeshResult {
  EdgeLabels labels;  ///< after repair, so promoted edges read Frontier
  TraversalResult traversal;
  RepairResult repair;
  PolyMesh mesh;
  MeshStats stats;
  PhaseTimes times;
};

/// Label, traverse, repair and assemble. Phase times come from a monotonic
/// clock around each phase; `total` also covers assembly.
MeshResult generate_mesh(const Triangulation& tri, bool parallel = false);

}  // namespace polylla
