#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "med/geometry.hpp"
#include "med/graph_model.hpp"

namespace med {

struct Intersection {
  Point point;
  double r1 = 0.0;  // parameter along the first segment
  double r2 = 0.0;  // parameter along the second segment
};

/// Proper intersection of two open segments. Touching at an endpoint,
/// disjoint and parallel segments give nullopt; collinear overlap throws
/// DegeneracyError.
std::optional<Intersection> segment_intersection(const Segment& s1, const Segment& s2);

/// A crossing absent from the resting partial drawing: the point lies
/// farther than delta0 from the nearer endpoint on both edges.
struct AvoidableCrossing {
  std::size_t edge1 = 0;  // index into layout.edges(); edges()[edge1] < edges()[edge2]
  std::size_t edge2 = 0;
  Point point;
  double r1 = 0.0;  // ratio along edge1 measured from its source
  double r2 = 0.0;
};

/// All avoidable crossings, sorted by (edge1 id, edge2 id).
std::vector<AvoidableCrossing> find_avoidable_crossings(const GraphLayout& layout, double delta0);

}  // namespace med
