#include "med/geometry.hpp"

#include <algorithm>

namespace med {

int orientation(Point a, Point b, Point c) {
  const Point ab = b - a;
  const Point ac = c - a;
  const double value = cross(ab, ac);
  const double scale = std::hypot(ab.x, ab.y) * std::hypot(ac.x, ac.y);
  if (std::abs(value) <= 1e-12 * scale) {
    return 0;
  }
  return value > 0 ? 1 : -1;
}

bool collinear_overlap(const Segment& s1, const Segment& s2) {
  if (orientation(s1.a, s1.b, s2.a) != 0 || orientation(s1.a, s1.b, s2.b) != 0) {
    return false;
  }
  const Point d = s1.b - s1.a;
  const double len2 = dot(d, d);
  const double t0 = dot(s2.a - s1.a, d) / len2;
  const double t1 = dot(s2.b - s1.a, d) / len2;
  const double lo = std::max(0.0, std::min(t0, t1));
  const double hi = std::min(1.0, std::max(t0, t1));
  return hi - lo > kEndpointEpsilon;
}

}  // namespace med
