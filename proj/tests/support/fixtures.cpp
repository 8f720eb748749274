#include "fixtures.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fixture {

using polylla::Index;

Triangulation unit_square() { return Triangulation::build({0, 0, 1, 0, 1, 1, 0, 1}, {0, 1, 2, 0, 2, 3}); }

Triangulation single_triangle() { return Triangulation::build({0, 0, 1, 0, 0, 1}, {0, 1, 2}); }

namespace {

std::vector<double> spokes(int count, double step_deg, const std::vector<double>& lengths) {
  std::vector<double> v{0, 0};
  for (int i = 0; i < count; ++i) {
    const double a = i * step_deg * std::numbers::pi / 180;
    v.push_back(lengths[i] * std::cos(a));
    v.push_back(lengths[i] * std::sin(a));
  }
  return v;
}

}  // namespace

Triangulation spiral_strip() {
  std::vector<Index> t;
  for (Index i = 1; i <= 5; ++i) t.insert(t.end(), {0, i, i + 1});
  return Triangulation::build(spokes(6, 60, {1.0, 1.1, 1.2, 1.3, 1.4, 1.5}), t);
}

Triangulation spiral_fan() {
  std::vector<Index> t;
  for (Index i = 1; i <= 6; ++i) t.insert(t.end(), {0, i, i % 6 + 1});
  return Triangulation::build(spokes(6, 60, {1.0, 1.1, 1.2, 1.3, 1.4, 1.5}), t);
}

Triangulation four_spoke_tip() {
  std::vector<double> v = spokes(4, 62, {1.0, 1.1, 1.21, 1.331});
  // Apex of triangle 4: just outside the midpoint of the long side 4-1.
  const double mx = (v[2] + v[8]) / 2, my = (v[3] + v[9]) / 2;
  const double dx = v[2] - v[8], dy = v[3] - v[9];
  const double len = std::hypot(dx, dy);
  v.push_back(mx + 0.3 * dy / len);
  v.push_back(my - 0.3 * dx / len);
  return Triangulation::build(v, {0, 1, 2, 0, 2, 3, 0, 3, 4, 0, 4, 1, 4, 5, 1});
}

std::string data_path(const std::string& file) { return std::string(POLYLLA_TEST_DATA) + "/" + file; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Triangulation load_data(const std::string& name) {
  return polylla::load_triangle_files(read_text(data_path(name + ".node")), read_text(data_path(name + ".ele")));
}

}  // namespace fixture
