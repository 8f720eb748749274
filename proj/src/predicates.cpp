#include "polylla/predicates.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>

namespace polylla {
namespace {

using Rational = boost::multiprecision::cpp_rational;

constexpr double kEps = std::numeric_limits<double>::epsilon() * 0.5;
// Forward error bounds for the floating-point determinant evaluations
// (Shewchuk, "Adaptive Precision Floating-Point Arithmetic", stage A).
constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIncircleBound = (10.0 + 96.0 * kEps) * kEps;
// |a|^2 - |b|^2 with each square of a sum of two squared differences.
constexpr double kDistanceBound = (8.0 + 64.0 * kEps) * kEps;
// Below this magnitude the bounds above may be invalidated by underflow.
constexpr double kTiny = 1e-250;

int sign_of(const Rational& r) { return r.sign(); }

int orient_exact(const Point& a, const Point& b, const Point& c) {
  const Rational acx = Rational(a.x) - Rational(c.x);
  const Rational bcx = Rational(b.x) - Rational(c.x);
  const Rational acy = Rational(a.y) - Rational(c.y);
  const Rational bcy = Rational(b.y) - Rational(c.y);
  return sign_of(acx * bcy - acy * bcx);
}

int incircle_exact(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Rational adx = Rational(a.x) - Rational(d.x), ady = Rational(a.y) - Rational(d.y);
  const Rational bdx = Rational(b.x) - Rational(d.x), bdy = Rational(b.y) - Rational(d.y);
  const Rational cdx = Rational(c.x) - Rational(d.x), cdy = Rational(c.y) - Rational(d.y);
  const Rational alift = adx * adx + ady * ady;
  const Rational blift = bdx * bdx + bdy * bdy;
  const Rational clift = cdx * cdx + cdy * cdy;
  const Rational det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                       clift * (adx * bdy - bdx * ady);
  return sign_of(det);
}

int distance_exact(const Point& a0, const Point& a1, const Point& b0, const Point& b1) {
  const Rational adx = Rational(a1.x) - Rational(a0.x), ady = Rational(a1.y) - Rational(a0.y);
  const Rational bdx = Rational(b1.x) - Rational(b0.x), bdy = Rational(b1.y) - Rational(b0.y);
  return sign_of((adx * adx + ady * ady) - (bdx * bdx + bdy * bdy));
}

}  // namespace

int orient2d(const Point& a, const Point& b, const Point& c) {
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;
  const double detsum = std::fabs(detleft) + std::fabs(detright);
  if (std::fabs(det) > kOrientBound * detsum && detsum > kTiny) return det > 0 ? 1 : -1;
  return orient_exact(a, b, c);
}

int incircle(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
  const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                           (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                           (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
  if (std::fabs(det) > kIncircleBound * permanent && permanent > kTiny) return det > 0 ? 1 : -1;
  return incircle_exact(a, b, c, d);
}

int compare_squared_distance(const Point& a0, const Point& a1, const Point& b0, const Point& b1) {
  const double adx = a1.x - a0.x, ady = a1.y - a0.y;
  const double bdx = b1.x - b0.x, bdy = b1.y - b0.y;
  const double la = adx * adx + ady * ady;
  const double lb = bdx * bdx + bdy * bdy;
  const double diff = la - lb;
  if (std::fabs(diff) > kDistanceBound * (la + lb) && la + lb > kTiny) return diff > 0 ? 1 : -1;
  return distance_exact(a0, a1, b0, b1);
}

double corner_angle(const Point& prev, const Point& at, const Point& next) {
  const double ux = next.x - at.x, uy = next.y - at.y;
  const double vx = prev.x - at.x, vy = prev.y - at.y;
  double deg = std::atan2(ux * vy - uy * vx, ux * vx + uy * vy) * (180.0 / 3.14159265358979323846);
  if (deg < 0.0) deg += 360.0;
  return deg;
}

}  // namespace polylla
