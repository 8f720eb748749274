#include "polylla/pipeline.hpp"

#include <chrono>

namespace polylla {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

MeshResult generate_mesh(const Triangulation& tri, bool parallel) {
  MeshResult r;
  const auto start = Clock::now();

  auto t0 = Clock::now();
  r.labels = label(tri);
  r.times.label = seconds_since(t0);

  t0 = Clock::now();
  r.traversal = build_all(tri, r.labels, parallel);
  r.times.traversal = seconds_since(t0);

  t0 = Clock::now();
  r.repair = repair(tri, r.labels, r.traversal);
  r.times.repair = seconds_since(t0);

  r.mesh = assemble(tri, r.repair.polygons);
  r.times.total = seconds_since(start);

  r.stats = compute_stats(r.mesh, tri, r.traversal);
  return r;
}

}  // namespace polylla
