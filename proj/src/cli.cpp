#include "med/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "med/crossings.hpp"
#include "med/errors.hpp"
#include "med/graph_model.hpp"
#include "med/kinematics.hpp"
#include "med/renderer.hpp"
#include "med/scheduler.hpp"
#include "med/tasks.hpp"

namespace med::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

std::string fixed3(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string shortest(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  // Prefer the shortest form that round-trips.
  for (int precision = 1; precision <= 17; ++precision) {
    char probe[48];
    std::snprintf(probe, sizeof(probe), "%.*g", precision, v);
    if (std::strtod(probe, nullptr) == v) {
      return probe;
    }
  }
  return buf;
}

/// Config sources, lowest precedence first: built-in defaults, --model
/// preset, --config file, individual flags.
struct ConfigFlags {
  std::string model;
  std::string file;
  std::optional<double> sigma_a;
  std::optional<double> delta0;
  std::optional<double> tau_half;
  std::optional<double> tau_distinct;
  std::optional<std::string> easing;
  std::optional<double> fps;
  std::optional<double> horizon;

  void attach(CLI::App* app, bool with_file = true) {
    app->add_option("--model", model, "Preset: slowlin, sloweas, fastlin, fasteas");
    if (with_file) {
      app->add_option("--config", file, "JSON config file");
    }
    app->add_option("--sigma", sigma_a, "Average stub-tip speed in px/s");
    app->add_option("--delta0", delta0, "Resting stub ratio");
    app->add_option("--tau-half", tau_half, "Hold duration at full length, ms");
    app->add_option("--tau-distinct", tau_distinct, "Separation duration, ms");
    app->add_option("--easing", easing, "linear | ease | cubic-bezier:x1,y1,x2,y2");
    app->add_option("--fps", fps, "Frames per second");
    app->add_option("--horizon", horizon, "Schedule horizon, ms");
  }

  AnimationConfig build() const {
    AnimationConfig cfg;
    if (!model.empty()) cfg = preset(model);
    if (!file.empty()) cfg = load_config(file, cfg);
    if (sigma_a) cfg.sigma_a = *sigma_a;
    if (delta0) cfg.delta0 = *delta0;
    if (tau_half) cfg.tau_half = *tau_half;
    if (tau_distinct) cfg.tau_distinct = *tau_distinct;
    if (easing) cfg.easing = parse_easing(*easing);
    if (fps) cfg.fps = *fps;
    if (horizon) cfg.horizon = *horizon;
    validate_config(cfg);
    return cfg;
  }
};

AnimationConfig config_from(const std::string& model, const std::string& file) {
  ConfigFlags flags;
  flags.model = model;
  flags.file = file;
  return flags.build();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Morphing edge drawing toolkit: scheduling, validation, trials and rendering", "medkit"};
  app.require_subcommand(1, 1);

  std::string layout_path;

  auto* validate = app.add_subcommand("validate", "Check a layout file");
  validate->add_option("layout", layout_path, "Layout JSON")->required();

  auto* crossings = app.add_subcommand("crossings", "List avoidable crossings");
  crossings->add_option("layout", layout_path, "Layout JSON")->required();
  double crossings_delta0 = 0.25;
  crossings->add_option("--delta0", crossings_delta0, "Resting stub ratio")->capture_default_str();

  auto* schedule = app.add_subcommand("schedule", "Compute an animation schedule");
  schedule->add_option("layout", layout_path, "Layout JSON")->required();
  ConfigFlags schedule_flags;
  schedule_flags.attach(schedule);
  std::string schedule_out;
  bool schedule_check = false;
  schedule->add_option("-o,--output", schedule_out, "Schedule JSON to write (stdout if omitted)");
  schedule->add_flag("--check", schedule_check, "Validate the schedule by 1 ms sampling");

  auto* render = app.add_subcommand("render", "Render frames or an animated SVG");
  render->add_option("layout", layout_path, "Layout JSON")->required();
  std::string render_schedule;
  std::string render_out;
  bool render_animated = false;
  std::optional<double> frame_at;
  render->add_option("--schedule", render_schedule, "Schedule JSON")->required();
  render->add_option("--out", render_out, "Output directory")->required();
  render->add_flag("--animated", render_animated, "Write animation.svg instead of frame files");
  render->add_option("--frame-at", frame_at, "Write the single frame at this time (ms) as frame.svg");

  auto* trial = app.add_subcommand("trial", "Generate a study trial");
  trial->add_option("layout", layout_path, "Layout JSON")->required();
  std::string task_name;
  std::uint64_t seed = 0;
  std::string trial_out;
  std::string trial_layout_out;
  trial->add_option("--task", task_name, "T1..T5")->required();
  trial->add_option("--seed", seed, "Random seed")->required();
  trial->add_option("-o,--output", trial_out, "Trial JSON to write")->required();
  trial->add_option("--layout-out", trial_layout_out,
                    "Layout copy with highlighted nodes (default: <output stem>.layout.json)");

  auto* stats = app.add_subcommand("stats", "Compare the makespans of two configurations");
  std::string config_a;
  std::string config_b;
  std::string model_a;
  std::string model_b;
  stats->add_option("--layout", layout_path, "Layout JSON")->required();
  stats->add_option("--config-a", config_a, "Config of schedule A");
  stats->add_option("--config-b", config_b, "Config of schedule B");
  stats->add_option("--model-a", model_a, "Preset of schedule A");
  stats->add_option("--model-b", model_b, "Preset of schedule B");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) {
      try {
        const GraphLayout layout = load_layout(layout_path);
        out << "ok: " << layout.node_count() << " nodes, " << layout.edge_count() << " edges, density "
            << shortest(layout.density()) << "\n";
        return kOk;
      } catch (const ParseError& e) {
        err << "invalid: " << e.what() << "\n";
      } catch (const ValidationError& e) {
        err << "invalid: " << e.what() << "\n";
      }
      return kFailure;
    }

    if (*crossings) {
      if (!(crossings_delta0 > 0.0 && crossings_delta0 < 0.5)) {
        throw UsageError("--delta0 must lie in (0, 1/2)");
      }
      const GraphLayout layout = load_layout(layout_path);
      for (const AvoidableCrossing& c : find_avoidable_crossings(layout, crossings_delta0)) {
        out << layout.edges()[c.edge1].id() << " " << layout.edges()[c.edge2].id() << " " << fixed3(c.point.x) << " "
            << fixed3(c.point.y) << " " << shortest(c.r1) << " " << shortest(c.r2) << "\n";
      }
      return kOk;
    }

    if (*schedule) {
      const GraphLayout layout = load_layout(layout_path);
      const AnimationConfig cfg = schedule_flags.build();
      const Schedule result = compute_schedule(layout, cfg);
      const std::string text = schedule_to_json(result);
      if (schedule_out.empty()) {
        out << text;
      } else {
        write_text_file(schedule_out, text);
        out << "makespan_ms: " << fixed3(result.makespan) << "\n";
      }
      if (schedule_check) {
        const ValidationReport report = validate_schedule(layout, cfg, result);
        if (!report.passed) {
          err << "schedule check failed: " << to_string(report.kind) << " at " << fixed3(report.time_ms)
              << " ms: " << report.message << "\n";
          return kFailure;
        }
        err << "schedule check: " << report.message << "\n";
      }
      return kOk;
    }

    if (*render) {
      const GraphLayout layout = load_layout(layout_path);
      const Schedule sched = load_schedule(render_schedule, layout);
      const std::filesystem::path dir(render_out);
      if (frame_at) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
        if (*frame_at < 0.0) throw UsageError("--frame-at must be non-negative");
        write_text_file(dir / "frame.svg", frame_to_svg(sample_frame(layout, sched.config, sched, *frame_at)));
        out << "wrote " << (dir / "frame.svg").string() << "\n";
        return kOk;
      }
      ExportOptions options;
      options.frames = !render_animated;
      options.animated = render_animated;
      const ExportResult result = export_animation(layout, sched.config, sched, dir, options);
      if (render_animated) {
        out << "wrote " << (dir / "animation.svg").string() << "\n";
      } else {
        out << "wrote " << result.frame_count << " frames to " << dir.string() << "\n";
      }
      return kOk;
    }

    if (*trial) {
      const GraphLayout layout = load_layout(layout_path);
      const TrialSpec spec = make_trial(layout, parse_task(task_name), seed);
      write_text_file(trial_out, trial_to_json(spec));
      std::filesystem::path layout_out = trial_layout_out;
      if (layout_out.empty()) {
        const std::filesystem::path p(trial_out);
        layout_out = p.parent_path() / (p.stem().string() + ".layout.json");
      }
      write_text_file(layout_out, layout_to_json(apply_trial_roles(layout, spec)));
      out << "wrote " << trial_out << " and " << layout_out.string() << "\n";
      return kOk;
    }

    if (*stats) {
      if ((config_a.empty() && model_a.empty()) || (config_b.empty() && model_b.empty())) {
        throw UsageError("stats needs --config-a/--model-a and --config-b/--model-b");
      }
      const GraphLayout layout = load_layout(layout_path);
      const Schedule a = compute_schedule(layout, config_from(model_a, config_a));
      const Schedule b = compute_schedule(layout, config_from(model_b, config_b));
      const ScheduleStats sa = schedule_stats(a);
      const ScheduleStats sb = schedule_stats(b);
      out << "makespan_a_ms: " << fixed3(sa.makespan) << "\n";
      out << "makespan_b_ms: " << fixed3(sb.makespan) << "\n";
      out << "animations_a: " << sa.total_animations << "\n";
      out << "animations_b: " << sb.total_animations << "\n";
      out << "slowdown: " << shortest(relative_slowdown(a, b)) << "\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace med::cli
