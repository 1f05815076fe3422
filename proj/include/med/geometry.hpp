#pragma once

#include <cmath>

namespace med {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double distance(Point a, Point b) { return std::hypot(b.x - a.x, b.y - a.y); }

/// Point at parameter t along a->b.
inline Point lerp(Point a, Point b, double t) { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }

struct Segment {
  Point a;
  Point b;

  double length() const { return distance(a, b); }
};

/// Parameters closer than this to 0 or 1 count as touching an endpoint.
inline constexpr double kEndpointEpsilon = 1e-12;

/// Sign of the turn a->b->c: +1 left, -1 right, 0 collinear. The collinear
/// band is relative: |cross| <= 1e-12 * |b-a| * |c-a|.
int orientation(Point a, Point b, Point c);

/// True when both segments lie on one line and share more than one point.
bool collinear_overlap(const Segment& s1, const Segment& s2);

}  // namespace med
