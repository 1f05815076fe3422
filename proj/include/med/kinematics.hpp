#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "med/easing.hpp"
#include "med/graph_model.hpp"

namespace med {

/// Parameters shared by every edge animation of one drawing. Times are in
/// milliseconds, lengths in pixels.
struct AnimationConfig {
  double sigma_a = 100.0;  // average stub-tip speed, px/s
  double delta0 = 0.25;    // resting stub ratio
  double tau_half = 100.0;
  double tau_distinct = 50.0;
  EasingSpec easing = EasingSpec::linear();
  double fps = 30.0;
  std::optional<double> horizon;

  bool operator==(const AnimationConfig&) const = default;
};

/// Throws ConfigError when an invariant of AnimationConfig is violated.
void validate_config(const AnimationConfig& cfg);

/// The four study conditions: slowlin, sloweas, fastlin, fasteas.
AnimationConfig preset(std::string_view name);

/// Reads the JSON config format over `base`; absent keys keep base values.
AnimationConfig parse_config(std::string_view raw, const AnimationConfig& base = {});
AnimationConfig load_config(const std::string& path, const AnimationConfig& base = {});
std::string config_to_json(const AnimationConfig& cfg);

/// Timing of one edge's grow-hold-retract cycle.
struct EdgeAnimation {
  std::size_t edge = 0;
  double tau = 0.0;    // one-way morph, ms
  double total = 0.0;  // 2 * tau + tau_half, ms
};

EdgeAnimation tau_edge(const GraphLayout& layout, std::size_t edge, const AnimationConfig& cfg);
EdgeAnimation tau_edge(const GraphLayout& layout, const EdgeSpec& e, const AnimationConfig& cfg);

/// Stub ratio t_rel ms after the animation starts; delta0 outside the
/// animation, 1/2 during the hold, time-mirrored easing while retracting.
double stub_ratio_at(const EdgeAnimation& anim, const AnimationConfig& cfg, double t_rel);

/// Offset after start at which the growing stub first reaches `ratio`.
/// Throws RangeError unless delta0 < ratio <= 1/2.
double time_to_ratio(const EdgeAnimation& anim, const AnimationConfig& cfg, double ratio);

struct TimeInterval {
  double begin = 0.0;
  double end = 0.0;

  bool contains(const TimeInterval& other) const { return begin <= other.begin && other.end <= end; }
};

/// Closed interval during which the point at along-edge ratio `r_point` is
/// covered by a stub, for an animation starting at `start`.
/// Throws RangeError unless delta0 < r_point < 1 - delta0.
TimeInterval occupancy_interval(const EdgeAnimation& anim, const AnimationConfig& cfg, double r_point,
                                double start = 0.0);

/// Relative occupancy offset t_r for a point at distance ratio s = min(r, 1-r).
double occupancy_offset(const EdgeAnimation& anim, const AnimationConfig& cfg, double r_point);

}  // namespace med
