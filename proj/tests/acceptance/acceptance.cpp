// Acceptance suite: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "med/crossings.hpp"
#include "med/easing.hpp"
#include "med/errors.hpp"
#include "med/kinematics.hpp"
#include "med/renderer.hpp"
#include "med/scheduler.hpp"
#include "med/tasks.hpp"
#include "oracles.hpp"
#include "random_layouts.hpp"

using namespace med;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const Outcome& o) {
  std::printf("[%s] %d. %s: %s\n", o.passed ? "PASS" : "FAIL", id, title, o.detail.c_str());
  std::fflush(stdout);
  if (!o.passed) ++failures;
}

Outcome fail(std::string msg) { return {false, std::move(msg)}; }

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), f, a);
  return buf;
}

const char* kPresets[] = {"slowlin", "sloweas", "fastlin", "fasteas"};

// Random layouts for criteria 1, 2 and 9.
std::vector<GraphLayout> soundness_layouts() {
  std::vector<GraphLayout> out;
  std::mt19937_64 rng(20240601);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 10 + gen::below(rng, 51);
    const double density = gen::uniform(rng, 2.0, 5.5);
    out.push_back(gen::synthetic_layout(1000 + i, n, density));
  }
  return out;
}

// Layouts matching the size and density range of the stimulus graphs.
std::vector<GraphLayout> stimulus_scale_layouts() {
  const std::pair<std::size_t, double> shapes[] = {{40, 5.35}, {52, 2.92}, {58, 2.12}, {45, 3.5}};
  std::vector<GraphLayout> out;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto [n, d] = shapes[i % 4];
    out.push_back(gen::synthetic_layout(5000 + i, n, d));
  }
  return out;
}

Outcome criterion_soundness(const std::vector<GraphLayout>& layouts) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  std::size_t samples = 0;
  for (std::size_t i = 0; i < layouts.size(); ++i) {
    for (const char* name : kPresets) {
      const AnimationConfig cfg = preset(name);
      const Schedule s = compute_schedule(layouts[i], cfg);
      const ValidationReport r = validate_schedule(layouts[i], cfg, s, 1.0);
      samples += r.samples;
      if (!r.passed) {
        return fail("layout " + std::to_string(i) + " " + name + ": " + std::string(to_string(r.kind)) + " at " +
                    fmt("%.3f ms: ", r.time_ms) + r.message);
      }
      ++checked;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome o;
  o.detail = std::to_string(checked) + " schedules valid, " + std::to_string(samples) + " samples, " +
             fmt("%.1f s", secs);
  if (secs >= 120.0) o = fail(o.detail + " (over the 2 minute budget)");
  return o;
}

Outcome criterion_initial_frame(const std::vector<GraphLayout>& layouts) {
  std::size_t stubs = 0;
  for (std::size_t i = 0; i < layouts.size(); ++i) {
    for (const char* name : kPresets) {
      const AnimationConfig cfg = preset(name);
      const Schedule s = compute_schedule(layouts[i], cfg);
      const FrameGeometry f = sample_frame(layouts[i], cfg, s, 0.0);
      for (const StubPair& sp : f.stubs) {
        if (sp.ratio != 0.25) {
          return fail("layout " + std::to_string(i) + " " + name + " edge " + sp.edge.id() + fmt(" ratio %.17g", sp.ratio));
        }
        ++stubs;
      }
    }
  }
  return {true, std::to_string(stubs) + " edges at ratio 1/4 in the t=0 frame"};
}

Outcome criterion_easing() {
  const EasingSpec lin = EasingSpec::linear();
  const EasingSpec ease = EasingSpec::ease();
  for (const EasingSpec& s : {lin, ease}) {
    if (eval(s, 0.0) != 0.0 || eval(s, 1.0) != 1.0) return fail("boundary values not exact for " + format_easing(s));
  }
  double worst = 0.0;
  for (const EasingSpec& s : {lin, ease}) {
    for (std::size_t i = 0; i < 10'000; ++i) {
      const double rho = static_cast<double>(i) / 9'999.0;
      worst = std::max(worst, std::abs(invert(s, eval(s, rho)) - rho));
    }
  }
  if (worst > 1e-6) return fail(fmt("round-trip error %.3g", worst));
  const EasingSpec id = EasingSpec::cubic_bezier(1.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0);
  double id_err = 0.0;
  for (std::size_t i = 0; i < 10'000; ++i) {
    const double rho = static_cast<double>(i) / 9'999.0;
    id_err = std::max(id_err, std::abs(eval(id, rho) - eval(lin, rho)));
  }
  if (id_err > 1e-6) return fail(fmt("identity curve deviates by %.3g", id_err));
  return {true, fmt("max round-trip error %.2e", worst) + fmt(", identity curve error %.2e", id_err)};
}

struct StimulusScale {
  std::vector<double> slowlin, sloweas, fastlin, fasteas;
};

StimulusScale stimulus_scale_makespans(const std::vector<GraphLayout>& layouts) {
  StimulusScale m;
  for (const GraphLayout& layout : layouts) {
    m.slowlin.push_back(compute_schedule(layout, preset("slowlin")).makespan);
    m.sloweas.push_back(compute_schedule(layout, preset("sloweas")).makespan);
    m.fastlin.push_back(compute_schedule(layout, preset("fastlin")).makespan);
    m.fasteas.push_back(compute_schedule(layout, preset("fasteas")).makespan);
  }
  return m;
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

Outcome criterion_speed_ratio(const StimulusScale& m) {
  std::vector<double> lin;
  std::vector<double> eas;
  for (std::size_t i = 0; i < m.slowlin.size(); ++i) {
    lin.push_back(m.slowlin[i] / m.fastlin[i] - 1.0);
    eas.push_back(m.sloweas[i] / m.fasteas[i] - 1.0);
  }
  const auto [lo, hi] = std::minmax_element(lin.begin(), lin.end());
  std::string detail = fmt("Lin slowdown mean %.3f", mean(lin)) + fmt(" range [%.3f", *lo) + fmt(", %.3f]", *hi) +
                       fmt("; Eas mean %.3f (reference 0.74/0.87)", mean(eas));
  for (std::size_t i = 0; i < lin.size(); ++i) {
    if (lin[i] < 0.5 || lin[i] > 1.0) return fail(detail + "; layout " + std::to_string(i) + " out of [0.5, 1.0]");
  }
  if (mean(lin) < 0.6 || mean(lin) > 1.0) return fail(detail + "; mean out of [0.6, 1.0]");
  return {true, detail};
}

Outcome criterion_easing_slowdown(const StimulusScale& m) {
  std::size_t ok = 0;
  std::vector<double> slow;
  std::vector<double> fast;
  for (std::size_t i = 0; i < m.slowlin.size(); ++i) {
    ok += m.sloweas[i] >= m.slowlin[i];
    ok += m.fasteas[i] >= m.fastlin[i];
    slow.push_back(m.sloweas[i] / m.slowlin[i] - 1.0);
    fast.push_back(m.fasteas[i] / m.fastlin[i] - 1.0);
  }
  const std::size_t total = 2 * m.slowlin.size();
  std::vector<double> all = slow;
  all.insert(all.end(), fast.begin(), fast.end());
  const double share = static_cast<double>(ok) / static_cast<double>(total);
  const std::string detail = std::to_string(ok) + "/" + std::to_string(total) + " instances Eas >= Lin" +
                             fmt("; mean slowdown %.3f", mean(all)) + fmt(" (slow %.3f", mean(slow)) +
                             fmt(", fast %.3f; reference 0.20/0.11)", mean(fast));
  if (share < 0.9) return fail(detail);
  if (mean(all) < 0.0 || mean(all) > 0.4) return fail(detail + "; mean out of [0, 0.4]");
  return {true, detail};
}

Outcome criterion_geometry() {
  std::size_t crossings = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GraphLayout layout = gen::small_random_layout(70000 + seed, 3 + seed % 10, 15);
    const auto got = find_avoidable_crossings(layout, 0.25);
    const auto ref = oracle::brute_force_crossings(layout, 0.25);
    if (got.size() != ref.size()) {
      return fail("layout " + std::to_string(seed) + ": " + std::to_string(got.size()) + " vs oracle " +
                  std::to_string(ref.size()));
    }
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (layout.edges()[got[i].edge1] != ref[i].e1 || layout.edges()[got[i].edge2] != ref[i].e2 ||
          std::abs(got[i].r1 - ref[i].r1) > 1e-9 || std::abs(got[i].r2 - ref[i].r2) > 1e-9) {
        return fail("layout " + std::to_string(seed) + ": crossing " + std::to_string(i) + " differs");
      }
    }
    crossings += got.size();
  }
  const GraphLayout k4({{"a", {0, 0}}, {"b", {1, 0}}, {"c", {1, 1}}, {"d", {0, 1}}},
                       {EdgeSpec("a", "b"), EdgeSpec("b", "c"), EdgeSpec("c", "d"), EdgeSpec("a", "d"),
                        EdgeSpec("a", "c"), EdgeSpec("b", "d")});
  const auto k4c = find_avoidable_crossings(k4, 0.25);
  if (k4c.size() != 1 || k4c[0].r1 != 0.5 || k4c[0].r2 != 0.5) return fail("K4 on a square");
  return {true, "200 layouts agree with the exhaustive checker (" + std::to_string(crossings) +
                    " crossings); K4 gives one crossing at (0.5, 0.5)"};
}

Outcome criterion_kinematics() {
  std::mt19937_64 rng(777);
  double worst = 0.0;
  for (const EasingSpec& easing : {EasingSpec::linear(), EasingSpec::ease()}) {
    AnimationConfig cfg = preset("slowlin");
    cfg.easing = easing;
    for (int i = 0; i < 1000; ++i) {
      const double length = gen::uniform(rng, 20.0, 600.0);
      const GraphLayout layout({{"a", {0, 0}}, {"b", {length, 0}}}, {EdgeSpec("a", "b")});
      double r = gen::uniform(rng, 0.2501, 0.7499);
      const EdgeAnimation anim = tau_edge(layout, 0, cfg);
      const TimeInterval iv = occupancy_interval(anim, cfg, r);
      const double s = std::min(r, 1.0 - r);
      double first = NAN;
      double last = NAN;
      const auto steps = static_cast<long>(std::ceil(anim.total / 0.1));
      for (long k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * 0.1;
        if (stub_ratio_at(anim, cfg, t) >= s) {
          if (std::isnan(first)) first = t;
          last = t;
        }
      }
      if (std::isnan(first)) return fail("point never covered");
      worst = std::max({worst, std::abs(first - iv.begin), std::abs(last - iv.end)});
    }
  }
  if (worst > 1.0) return fail(fmt("max endpoint deviation %.3f ms", worst));
  return {true, fmt("2000 pairs, max endpoint deviation %.4f ms", worst)};
}

Outcome criterion_tasks() {
  std::size_t queries = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 5 + gen::below(rng, 26);
    const GraphLayout g = gen::random_graph(9000 + seed, n, gen::uniform(rng, 0.05, 0.4));
    const auto adj = oracle::adjacency_matrix(g);
    const auto hops = oracle::all_pairs_hops(g);
    const auto& nodes = g.nodes();
    for (int q = 0; q < 40; ++q) {
      const std::size_t a = gen::below(rng, n);
      std::size_t b = gen::below(rng, n - 1);
      if (b >= a) ++b;
      const std::string& ia = nodes[a].id;
      const std::string& ib = nodes[b].id;
      if (adjacency_query(g, ia, ib) != adj[a][b]) return fail("adjacency mismatch");
      const int k = 1 + static_cast<int>(gen::below(rng, 4));
      if (bounded_path_exists(g, ia, ib, k) != (hops[a][b] >= 0 && hops[a][b] <= k)) return fail("path mismatch");
      std::int64_t common = 0;
      for (std::size_t x = 0; x < n; ++x) common += adj[a][x] && adj[b][x];
      if (common_neighbors(g, ia, ib) != common) return fail("common neighbor mismatch");

      std::vector<std::string> blues;
      std::int64_t nb = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (x != a && gen::below(rng, 3) == 0) {
          blues.push_back(nodes[x].id);
          nb += adj[a][x];
        }
      }
      if (!blues.empty() && neighborhood_size(g, ia, blues) != nb) return fail("neighborhood mismatch");

      std::vector<std::string> ra;
      std::vector<std::string> rb;
      std::vector<int> side(n, 0);
      for (std::size_t x = 0; x < n; ++x) {
        side[x] = static_cast<int>(gen::below(rng, 3));
        if (side[x] == 1) ra.push_back(nodes[x].id);
        if (side[x] == 2) rb.push_back(nodes[x].id);
      }
      if (!ra.empty() && !rb.empty()) {
        std::int64_t cross = 0;
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) cross += side[x] == 1 && side[y] == 2 && adj[x][y];
        if (inter_region_edges(g, ra, rb) != cross) return fail("inter-region mismatch");
      }
      queries += 5;
    }
  }
  const double s1 = score_answer(Task::T2, Answer{std::int64_t{6}}, Answer{std::int64_t{7}});
  const double s0 = score_answer(Task::T4, Answer{std::int64_t{3}}, Answer{std::int64_t{3}});
  if (s1 != 0.5 || s0 != 0.0) return fail("score formula");
  return {true, std::to_string(queries) + " queries agree with brute force; |d|=1 -> 0.5, |d|=0 -> 0"};
}

Outcome criterion_determinism(const std::vector<GraphLayout>& layouts) {
  const auto dir = std::filesystem::temp_directory_path() / "medkit_acceptance";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::size_t frames = 0;
  for (std::size_t i = 0; i < layouts.size(); i += 10) {
    for (const char* name : kPresets) {
      const AnimationConfig cfg = preset(name);
      const Schedule a = compute_schedule(layouts[i], cfg);
      const Schedule b = compute_schedule(layouts[i], cfg);
      const std::string text = schedule_to_json(a);
      if (text != schedule_to_json(b)) return fail("schedule differs between runs");
      const auto path = dir / "schedule.json";
      write_text_file(path, text);
      const Schedule back = load_schedule(path.string(), layouts[i]);
      if (schedule_to_json(back) != text) return fail("schedule file round-trip differs");
      for (double t : frame_times(a.makespan, cfg.fps)) {
        const std::string direct = frame_to_svg(sample_frame(layouts[i], cfg, a, t));
        if (direct != frame_to_svg(sample_frame(layouts[i], cfg, b, t))) return fail("frame differs between runs");
        if (direct != frame_to_svg(sample_frame(layouts[i], back.config, back, t))) {
          return fail("frame from schedule file differs at " + fmt("%.3f ms", t));
        }
        ++frames;
      }
      if (animation_svg(layouts[i], cfg, a) != animation_svg(layouts[i], back.config, back)) {
        return fail("animated SVG from schedule file differs");
      }
    }
  }
  std::filesystem::remove_all(dir);
  return {true, std::to_string(frames) + " frames byte-identical across runs and file round-trips"};
}

}  // namespace

int main() {
  try {
    const std::vector<GraphLayout> layouts = soundness_layouts();
    report(1, "schedule soundness", criterion_soundness(layouts));
    report(2, "initial frame at delta0", criterion_initial_frame(layouts));
    report(3, "easing numerics", criterion_easing());
    const StimulusScale m = stimulus_scale_makespans(stimulus_scale_layouts());
    report(4, "slow/fast makespan ratio", criterion_speed_ratio(m));
    report(5, "easing slowdown direction", criterion_easing_slowdown(m));
    report(6, "crossing oracle", criterion_geometry());
    report(7, "occupancy oracle", criterion_kinematics());
    report(8, "task ground truth", criterion_tasks());
    report(9, "determinism and round-trips", criterion_determinism(layouts));
  } catch (const std::exception& e) {
    std::printf("[FAIL] aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
