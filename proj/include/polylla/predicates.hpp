#pragma once

// Robust geometric predicates on double coordinates.
//
// Each predicate first evaluates in floating point with a forward error bound
// and only falls back to exact rational arithmetic when the sign cannot be
// certified. Results are therefore exact for every finite input.

namespace polylla {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Sign of twice the signed area of (a, b, c): +1 ccw, -1 cw, 0 collinear.
int orient2d(const Point& a, const Point& b, const Point& c);

/// +1 if d lies strictly inside the circumcircle of the ccw triangle (a, b, c),
/// -1 if strictly outside, 0 if co-circular. For a cw triangle the sign flips.
int incircle(const Point& a, const Point& b, const Point& c, const Point& d);

/// Exact three-way comparison of |a1 - a0|^2 and |b1 - b0|^2.
/// Returns -1, 0 or +1.
int compare_squared_distance(const Point& a0, const Point& a1, const Point& b0, const Point& b1);

/// Floating-point squared distance (not exact; for reporting only).
inline double squared_distance(const Point& a, const Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  return dx * dx + dy * dy;
}

/// Twice the signed area of (a, b, c) in floating point.
inline double cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

/// Interior angle at `at` of a ccw polygon corner prev -> at -> next, in
/// degrees within [0, 360). Reflex corners give angles above 180.
double corner_angle(const Point& prev, const Point& at, const Point& next);

}  // namespace polylla
