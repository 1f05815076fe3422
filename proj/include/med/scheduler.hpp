#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "med/crossings.hpp"
#include "med/graph_model.hpp"
#include "med/kinematics.hpp"

namespace med {

/// Start times of one edge's animations.
struct EdgeSchedule {
  EdgeSpec edge;
  EdgeAnimation animation;
  std::vector<double> starts;  // strictly increasing, ms
};

/// Start times for every edge of a layout, in layout edge order.
struct Schedule {
  AnimationConfig config;
  std::vector<EdgeSchedule> edges;
  double makespan = 0.0;  // completion of the last animation, ms
};

/// A scheduling constraint at one avoidable crossing: each edge covers the
/// crossing point from `offset` to `total - offset` after its start.
struct ConflictConstraint {
  AvoidableCrossing crossing;
  double offset1 = 0.0;
  double offset2 = 0.0;
};

std::vector<ConflictConstraint> conflict_constraints(const GraphLayout& layout, const AnimationConfig& cfg,
                                                     const std::vector<EdgeAnimation>& animations);

/// Open interval of start times; `hi` itself is allowed.
struct OpenWindow {
  double lo = 0.0;
  double hi = 0.0;
};

/// Starts `ts` of a candidate animation (covering the crossing on
/// [ts + offset, ts + total - offset]) that would bring the two coverages of
/// the point closer than `tau_distinct` to the existing occupancy.
OpenWindow forbidden_start_window(double offset, double total, const TimeInterval& existing,
                                  double tau_distinct);

/// Smallest t >= lower_bound on the 1 microsecond grid lying outside every
/// window.
double earliest_feasible_start(std::vector<OpenWindow> windows, double lower_bound);

/// Greedy crossing-aware scheduling. Edges are processed in decreasing
/// one-way duration (ties by edge id), each placed at its earliest feasible
/// start. With a horizon, further passes append repeats while they fit.
/// Throws ConfigError for invalid configs, including a horizon shorter than
/// the single-pass makespan.
Schedule compute_schedule(const GraphLayout& layout, const AnimationConfig& cfg);

enum class ViolationKind {
  None,
  Structure,
  NegativeStart,
  Horizon,
  StartSeparation,
  InitialFrame,
  RatioRange,
  CrossingSeparation,
};

std::string_view to_string(ViolationKind kind);

struct ValidationReport {
  bool passed = true;
  ViolationKind kind = ViolationKind::None;
  double time_ms = 0.0;
  std::string edge_a;
  std::string edge_b;
  std::string message;
  std::size_t samples = 0;
};

/// Brute-force check of a schedule by sampling every `step_ms` over
/// [0, makespan]. Independent of the interval arithmetic used by
/// compute_schedule. Reports the earliest violation found.
ValidationReport validate_schedule(const GraphLayout& layout, const AnimationConfig& cfg,
                                   const Schedule& schedule, double step_ms = 1.0);

struct ScheduleStats {
  double makespan = 0.0;
  std::vector<std::size_t> animation_counts;  // per edge
  std::size_t total_animations = 0;
  /// Mean idle time between the end of an animation and the next start of
  /// the same edge; empty when no edge repeats.
  std::optional<double> mean_gap;
};

ScheduleStats schedule_stats(const Schedule& schedule);

/// makespan(a) / makespan(b) - 1. Throws UsageError when the schedules
/// belong to different edge sets.
double relative_slowdown(const Schedule& a, const Schedule& b);

/// Schedule file format. Times are rounded to 3 decimals.
std::string schedule_to_json(const Schedule& schedule);
/// Reads a schedule file for `layout`; per-edge durations are recomputed
/// from the embedded config and must match the stored values.
Schedule parse_schedule(std::string_view raw, const GraphLayout& layout);
Schedule load_schedule(const std::string& path, const GraphLayout& layout);

}  // namespace med
