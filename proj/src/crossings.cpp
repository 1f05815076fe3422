#include "med/crossings.hpp"

#include <algorithm>
#include <utility>

#include "med/errors.hpp"

namespace med {

std::optional<Intersection> segment_intersection(const Segment& s1, const Segment& s2) {
  const int o1 = orientation(s1.a, s1.b, s2.a);
  const int o2 = orientation(s1.a, s1.b, s2.b);
  const int o3 = orientation(s2.a, s2.b, s1.a);
  const int o4 = orientation(s2.a, s2.b, s1.b);

  if (o1 == 0 && o2 == 0) {
    if (collinear_overlap(s1, s2)) {
      throw DegeneracyError("collinear overlapping segments");
    }
    return std::nullopt;
  }
  // A proper crossing needs strict sign changes on both sides.
  if (o1 * o2 >= 0 || o3 * o4 >= 0) {
    return std::nullopt;
  }

  const Point d1 = s1.b - s1.a;
  const Point d2 = s2.b - s2.a;
  const Point w = s2.a - s1.a;
  const double denom = cross(d1, d2);
  const double r1 = cross(w, d2) / denom;
  const double r2 = cross(w, d1) / denom;
  if (r1 <= kEndpointEpsilon || r1 >= 1.0 - kEndpointEpsilon || r2 <= kEndpointEpsilon ||
      r2 >= 1.0 - kEndpointEpsilon) {
    return std::nullopt;
  }
  return Intersection{lerp(s1.a, s1.b, r1), r1, r2};
}

std::vector<AvoidableCrossing> find_avoidable_crossings(const GraphLayout& layout, double delta0) {
  const auto& edges = layout.edges();
  // Visit edges in id order so each pair is produced already sorted.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });

  auto clear_of_rest = [delta0](double r) { return std::min(r, 1.0 - r) > delta0; };

  std::vector<AvoidableCrossing> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t e1 = order[i];
    const auto ends1 = layout.endpoints(e1);
    const Segment s1 = layout.segment(e1);
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const std::size_t e2 = order[j];
      const auto ends2 = layout.endpoints(e2);
      if (ends1[0] == ends2[0] || ends1[0] == ends2[1] || ends1[1] == ends2[0] || ends1[1] == ends2[1]) {
        continue;
      }
      const auto hit = segment_intersection(s1, layout.segment(e2));
      if (!hit || !clear_of_rest(hit->r1) || !clear_of_rest(hit->r2)) {
        continue;
      }
      out.push_back({e1, e2, hit->point, hit->r1, hit->r2});
    }
  }
  return out;
}

}  // namespace med
