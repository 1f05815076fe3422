#include "med/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "med/errors.hpp"

namespace med {

using nlohmann::json;

namespace {

/// Smallest value on the 1e-3 ms grid that is >= x.
double grid_ceil(double x) {
  double k = std::floor(x * 1000.0);
  while (k / 1000.0 < x) {
    k += 1.0;
  }
  return k / 1000.0;
}

double round3(double x) { return std::round(x * 1000.0) / 1000.0; }

/// One side of a conflict seen from a single edge.
struct Incident {
  std::size_t other;
  double own_offset;
  double other_offset;
};

}  // namespace

std::vector<ConflictConstraint> conflict_constraints(const GraphLayout& layout, const AnimationConfig& cfg,
                                                     const std::vector<EdgeAnimation>& animations) {
  std::vector<ConflictConstraint> out;
  for (const AvoidableCrossing& c : find_avoidable_crossings(layout, cfg.delta0)) {
    ConflictConstraint cc;
    cc.crossing = c;
    cc.offset1 = occupancy_offset(animations[c.edge1], cfg, c.r1);
    cc.offset2 = occupancy_offset(animations[c.edge2], cfg, c.r2);
    out.push_back(cc);
  }
  return out;
}

OpenWindow forbidden_start_window(double offset, double total, const TimeInterval& existing,
                                  double tau_distinct) {
  return {existing.begin - tau_distinct - total + offset, existing.end + tau_distinct - offset};
}

double earliest_feasible_start(std::vector<OpenWindow> windows, double lower_bound) {
  std::sort(windows.begin(), windows.end(), [](const OpenWindow& a, const OpenWindow& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
  double candidate = grid_ceil(lower_bound);
  for (const OpenWindow& w : windows) {
    if (w.lo >= candidate) {
      break;  // every remaining window opens at or after the candidate
    }
    if (candidate < w.hi) {
      candidate = grid_ceil(w.hi);
    }
  }
  return candidate;
}

Schedule compute_schedule(const GraphLayout& layout, const AnimationConfig& cfg) {
  validate_config(cfg);
  const std::size_t m = layout.edge_count();

  Schedule schedule;
  schedule.config = cfg;
  std::vector<EdgeAnimation> animations;
  animations.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    animations.push_back(tau_edge(layout, e, cfg));
  }

  std::vector<std::vector<Incident>> incidents(m);
  for (const ConflictConstraint& cc : conflict_constraints(layout, cfg, animations)) {
    incidents[cc.crossing.edge1].push_back({cc.crossing.edge2, cc.offset1, cc.offset2});
    incidents[cc.crossing.edge2].push_back({cc.crossing.edge1, cc.offset2, cc.offset1});
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto& edges = layout.edges();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (animations[a].tau != animations[b].tau) {
      return animations[a].tau > animations[b].tau;
    }
    return edges[a] < edges[b];
  });

  std::vector<std::vector<double>> starts(m);
  std::vector<OpenWindow> windows;
  auto place = [&](std::size_t e, double lower_bound) {
    windows.clear();
    const EdgeAnimation& anim = animations[e];
    for (const Incident& inc : incidents[e]) {
      const double other_total = animations[inc.other].total;
      for (double s : starts[inc.other]) {
        const TimeInterval occupied{s + inc.other_offset, s + other_total - inc.other_offset};
        windows.push_back(forbidden_start_window(inc.own_offset, anim.total, occupied, cfg.tau_distinct));
      }
    }
    return earliest_feasible_start(windows, lower_bound);
  };

  double makespan = 0.0;
  for (std::size_t e : order) {
    const double s = place(e, 0.0);
    starts[e].push_back(s);
    makespan = std::max(makespan, s + animations[e].total);
  }

  if (cfg.horizon) {
    const double horizon = *cfg.horizon;
    if (makespan > horizon) {
      throw ConfigError("horizon " + std::to_string(horizon) + " ms is shorter than the single-pass makespan " +
                        std::to_string(makespan) + " ms");
    }
    bool appended = true;
    while (appended) {
      appended = false;
      for (std::size_t e : order) {
        const EdgeAnimation& anim = animations[e];
        const double s = place(e, starts[e].back() + anim.total + cfg.tau_distinct);
        if (s + anim.total <= horizon) {
          starts[e].push_back(s);
          makespan = std::max(makespan, s + anim.total);
          appended = true;
        }
      }
    }
  }

  schedule.edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    schedule.edges.push_back({edges[e], animations[e], std::move(starts[e])});
  }
  schedule.makespan = makespan;
  return schedule;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::None:
      return "none";
    case ViolationKind::Structure:
      return "structure";
    case ViolationKind::NegativeStart:
      return "negative-start";
    case ViolationKind::Horizon:
      return "horizon";
    case ViolationKind::StartSeparation:
      return "start-separation";
    case ViolationKind::InitialFrame:
      return "initial-frame";
    case ViolationKind::RatioRange:
      return "ratio-range";
    case ViolationKind::CrossingSeparation:
      return "crossing-separation";
  }
  return "unknown";
}

namespace {

/// Sampled stub ratios of one animation: sample k0 + i holds ratios[i].
struct SampledRun {
  std::size_t k0 = 0;
  std::vector<double> ratios;
};

/// Maximal runs [first, last] of sample indices.
struct SampleRange {
  std::size_t first;
  std::size_t last;
};

class ViolationLog {
 public:
  void offer(ViolationKind kind, double t, std::string a, std::string b, std::string message) {
    if (report_.passed || t < report_.time_ms) {
      report_.passed = false;
      report_.kind = kind;
      report_.time_ms = t;
      report_.edge_a = std::move(a);
      report_.edge_b = std::move(b);
      report_.message = std::move(message);
    }
  }
  ValidationReport& report() { return report_; }

 private:
  ValidationReport report_;
};

std::string fmt_ms(double t) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::fixed << t;
  return ss.str();
}

}  // namespace

ValidationReport validate_schedule(const GraphLayout& layout, const AnimationConfig& cfg,
                                   const Schedule& schedule, double step_ms) {
  ViolationLog log;
  const std::size_t m = layout.edge_count();
  if (schedule.edges.size() != m) {
    log.offer(ViolationKind::Structure, 0.0, "", "",
              "schedule has " + std::to_string(schedule.edges.size()) + " edges, layout has " + std::to_string(m));
    return log.report();
  }
  for (std::size_t e = 0; e < m; ++e) {
    const EdgeSchedule& es = schedule.edges[e];
    const EdgeAnimation expected = tau_edge(layout, e, cfg);
    if (!(es.edge == layout.edges()[e]) || std::abs(es.animation.tau - expected.tau) > 1e-3 ||
        std::abs(es.animation.total - expected.total) > 1e-3) {
      log.offer(ViolationKind::Structure, 0.0, es.edge.id(), "",
                "edge entry does not match layout edge " + layout.edges()[e].id());
      return log.report();
    }
  }

  double makespan = 0.0;
  for (const EdgeSchedule& es : schedule.edges) {
    const std::string id = es.edge.id();
    const double total = es.animation.total;
    for (std::size_t i = 0; i < es.starts.size(); ++i) {
      const double s = es.starts[i];
      makespan = std::max(makespan, s + total);
      if (s < 0.0) {
        log.offer(ViolationKind::NegativeStart, s, id, "", "start " + fmt_ms(s) + " is negative");
      }
      if (cfg.horizon && s + total > *cfg.horizon + 1e-9) {
        log.offer(ViolationKind::Horizon, s, id, "", "animation ends after the horizon");
      }
      if (i > 0) {
        const double need = es.starts[i - 1] + total + cfg.tau_distinct;
        if (s < need - 1e-9) {
          log.offer(ViolationKind::StartSeparation, s, id, "",
                    "start " + fmt_ms(s) + " follows the previous animation by less than tau_distinct");
        }
      }
    }
  }

  const std::size_t sample_count = static_cast<std::size_t>(std::floor(makespan / step_ms)) + 1;
  log.report().samples = sample_count;
  const double lo_ratio = cfg.delta0;

  // Sample every animation window of every edge.
  std::vector<std::vector<SampledRun>> runs(m);
  for (std::size_t e = 0; e < m; ++e) {
    const EdgeSchedule& es = schedule.edges[e];
    for (double s : es.starts) {
      const double first_t = std::max(0.0, s);
      SampledRun run;
      run.k0 = static_cast<std::size_t>(std::ceil(first_t / step_ms));
      const std::size_t k1 =
          std::min(sample_count - 1, static_cast<std::size_t>(std::floor((s + es.animation.total) / step_ms)));
      for (std::size_t k = run.k0; k <= k1 && k >= run.k0; ++k) {
        const double t = static_cast<double>(k) * step_ms;
        const double r = stub_ratio_at(es.animation, cfg, t - s);
        if (r < lo_ratio - 1e-12 || r > 0.5 + 1e-12) {
          log.offer(ViolationKind::RatioRange, t, es.edge.id(), "", "stub ratio " + std::to_string(r) + " out of range");
        }
        run.ratios.push_back(r);
      }
      runs[e].push_back(std::move(run));
    }
  }

  // The first sample must show the resting drawing.
  for (std::size_t e = 0; e < m; ++e) {
    for (const SampledRun& run : runs[e]) {
      if (run.k0 == 0 && !run.ratios.empty() && run.ratios.front() != cfg.delta0) {
        log.offer(ViolationKind::InitialFrame, 0.0, schedule.edges[e].edge.id(), "",
                  "edge is not at delta0 at t=0");
      }
    }
  }

  auto covered_ranges = [&](std::size_t e, double s) {
    std::vector<SampleRange> out;
    for (const SampledRun& run : runs[e]) {
      bool open = false;
      for (std::size_t i = 0; i < run.ratios.size(); ++i) {
        const bool covered = run.ratios[i] >= s - 1e-9;
        if (covered && !open) {
          out.push_back({run.k0 + i, run.k0 + i});
          open = true;
        } else if (covered) {
          out.back().last = run.k0 + i;
        } else {
          open = false;
        }
      }
    }
    return out;
  };

  for (const AvoidableCrossing& c : find_avoidable_crossings(layout, cfg.delta0)) {
    const double s1 = std::min(c.r1, 1.0 - c.r1);
    const double s2 = std::min(c.r2, 1.0 - c.r2);
    const auto cov1 = covered_ranges(c.edge1, s1);
    const auto cov2 = covered_ranges(c.edge2, s2);
    for (const SampleRange& a : cov1) {
      for (const SampleRange& b : cov2) {
        double t_violation = -1.0;
        if (a.first <= b.last && b.first <= a.last) {
          t_violation = static_cast<double>(std::max(a.first, b.first)) * step_ms;
        } else {
          const SampleRange& early = a.last < b.first ? a : b;
          const SampleRange& late = a.last < b.first ? b : a;
          const double gap = static_cast<double>(late.first - early.last) * step_ms;
          if (gap < cfg.tau_distinct - 1e-9) {
            // Earliest covered sample of `early` within tau_distinct of late.first.
            const double late_t = static_cast<double>(late.first) * step_ms;
            double t = static_cast<double>(early.first) * step_ms;
            const double bound = late_t - cfg.tau_distinct;
            if (t <= bound) {
              t = (std::floor(bound / step_ms) + 1.0) * step_ms;
            }
            t_violation = t;
          }
        }
        if (t_violation >= 0.0) {
          log.offer(ViolationKind::CrossingSeparation, t_violation, layout.edges()[c.edge1].id(),
                    layout.edges()[c.edge2].id(),
                    "crossing point covered by both edges within tau_distinct near t=" + fmt_ms(t_violation));
        }
      }
    }
  }

  ValidationReport& report = log.report();
  if (report.passed) {
    report.message = "ok: " + std::to_string(sample_count) + " samples";
  }
  return report;
}

ScheduleStats schedule_stats(const Schedule& schedule) {
  ScheduleStats stats;
  stats.makespan = schedule.makespan;
  double gap_sum = 0.0;
  std::size_t gap_count = 0;
  for (const EdgeSchedule& es : schedule.edges) {
    stats.animation_counts.push_back(es.starts.size());
    stats.total_animations += es.starts.size();
    for (std::size_t i = 1; i < es.starts.size(); ++i) {
      gap_sum += es.starts[i] - (es.starts[i - 1] + es.animation.total);
      ++gap_count;
    }
  }
  if (gap_count > 0) {
    stats.mean_gap = gap_sum / static_cast<double>(gap_count);
  }
  return stats;
}

double relative_slowdown(const Schedule& a, const Schedule& b) {
  if (a.edges.size() != b.edges.size()) {
    throw UsageError("schedules belong to different layouts (edge counts differ)");
  }
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    if (!(a.edges[i].edge == b.edges[i].edge)) {
      throw UsageError("schedules belong to different layouts (edge " + a.edges[i].edge.id() + " vs " +
                       b.edges[i].edge.id() + ")");
    }
  }
  if (b.makespan <= 0.0) {
    throw UsageError("reference schedule has zero makespan");
  }
  return a.makespan / b.makespan - 1.0;
}

std::string schedule_to_json(const Schedule& schedule) {
  json doc;
  doc["config"] = json::parse(config_to_json(schedule.config));
  doc["makespan_ms"] = round3(schedule.makespan);
  json& jedges = doc["edges"] = json::array();
  for (const EdgeSchedule& es : schedule.edges) {
    json starts = json::array();
    for (double s : es.starts) {
      starts.push_back(round3(s));
    }
    jedges.push_back({{"source", es.edge.source},
                      {"target", es.edge.target},
                      {"tau_ms", round3(es.animation.tau)},
                      {"total_ms", round3(es.animation.total)},
                      {"starts_ms", std::move(starts)}});
  }
  return doc.dump(2) + "\n";
}

Schedule parse_schedule(std::string_view raw, const GraphLayout& layout) {
  json doc;
  try {
    doc = json::parse(raw.begin(), raw.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("schedule: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("config") || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("schedule: expected an object with 'config' and 'edges'");
  }
  Schedule schedule;
  schedule.config = parse_config(doc["config"].dump());

  const std::size_t m = layout.edge_count();
  std::vector<std::optional<EdgeSchedule>> slots(m);
  for (const json& je : doc["edges"]) {
    if (!je.is_object() || !je.contains("source") || !je.contains("target") || !je.contains("starts_ms")) {
      throw ParseError("schedule: edge entries need 'source', 'target' and 'starts_ms'");
    }
    try {
      EdgeSpec spec(je.at("source").get<std::string>(), je.at("target").get<std::string>());
      const std::size_t idx = layout.edge_index(spec);
      if (slots[idx]) {
        throw ValidationError("schedule: edge " + spec.id() + " listed twice");
      }
      EdgeSchedule es{spec, tau_edge(layout, idx, schedule.config), {}};
      for (const char* key : {"tau_ms", "total_ms"}) {
        if (je.contains(key)) {
          const double stored = je.at(key).get<double>();
          const double actual = key[1] == 'a' ? es.animation.tau : es.animation.total;
          if (std::abs(stored - actual) > 1e-3) {
            throw ValidationError("schedule: edge " + spec.id() + " " + key + " does not match the layout");
          }
        }
      }
      for (const json& s : je.at("starts_ms")) {
        es.starts.push_back(s.get<double>());
      }
      slots[idx] = std::move(es);
    } catch (const json::exception& e) {
      throw ParseError(std::string("schedule: ") + e.what());
    } catch (const LookupError& e) {
      throw ValidationError(std::string("schedule: ") + e.what());
    }
  }
  double makespan = 0.0;
  schedule.edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    if (!slots[e]) {
      throw ValidationError("schedule: missing edge " + layout.edges()[e].id());
    }
    for (double s : slots[e]->starts) {
      makespan = std::max(makespan, s + slots[e]->animation.total);
    }
    schedule.edges.push_back(std::move(*slots[e]));
  }
  schedule.makespan = makespan;
  if (auto it = doc.find("makespan_ms"); it != doc.end() && it->is_number()) {
    if (std::abs(it->get<double>() - makespan) > 1e-3) {
      throw ValidationError("schedule: makespan_ms does not match the stored starts");
    }
  }
  return schedule;
}

Schedule load_schedule(const std::string& path, const GraphLayout& layout) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read schedule '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_schedule(ss.str(), layout);
}

}  // namespace med
