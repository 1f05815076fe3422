#include <gtest/gtest.h>

#include <cmath>

#include "med/errors.hpp"
#include "med/kinematics.hpp"

using namespace med;

namespace {

GraphLayout segment_layout(double length) { return GraphLayout({{"a", {0, 0}}, {"b", {length, 0}}}, {EdgeSpec("a", "b")}); }

AnimationConfig linear_cfg(double sigma = 100.0) {
  AnimationConfig cfg;
  cfg.sigma_a = sigma;
  return cfg;
}

}  // namespace

TEST(TauEdge, LinearExample) {
  const GraphLayout layout = segment_layout(400.0);
  const EdgeAnimation anim = tau_edge(layout, 0, linear_cfg());
  EXPECT_DOUBLE_EQ(anim.tau, 1000.0);
  EXPECT_DOUBLE_EQ(anim.total, 2100.0);
  EXPECT_DOUBLE_EQ(tau_edge(layout, 0, linear_cfg(200.0)).tau, 500.0);
}

TEST(StubRatio, Phases) {
  const GraphLayout layout = segment_layout(400.0);
  const AnimationConfig cfg = linear_cfg();
  const EdgeAnimation anim = tau_edge(layout, 0, cfg);
  EXPECT_DOUBLE_EQ(stub_ratio_at(anim, cfg, -1.0), 0.25);
  EXPECT_DOUBLE_EQ(stub_ratio_at(anim, cfg, 0.0), 0.25);
  EXPECT_DOUBLE_EQ(stub_ratio_at(anim, cfg, 500.0), 0.375);
  EXPECT_DOUBLE_EQ(stub_ratio_at(anim, cfg, 1000.0), 0.5);
  EXPECT_DOUBLE_EQ(stub_ratio_at(anim, cfg, 1050.0), 0.5);
  EXPECT_DOUBLE_EQ(stub_ratio_at(anim, cfg, 1600.0), 0.375);
  EXPECT_DOUBLE_EQ(stub_ratio_at(anim, cfg, 2100.0), 0.25);
  EXPECT_DOUBLE_EQ(stub_ratio_at(anim, cfg, 3000.0), 0.25);
}

TEST(Occupancy, LinearExample) {
  const GraphLayout layout = segment_layout(400.0);
  const AnimationConfig cfg = linear_cfg();
  const EdgeAnimation anim = tau_edge(layout, 0, cfg);
  const TimeInterval iv = occupancy_interval(anim, cfg, 0.375);
  EXPECT_DOUBLE_EQ(iv.begin, 500.0);
  EXPECT_DOUBLE_EQ(iv.end, 1600.0);
  const TimeInterval mirrored = occupancy_interval(anim, cfg, 0.625, 100.0);
  EXPECT_DOUBLE_EQ(mirrored.begin, 600.0);
  EXPECT_DOUBLE_EQ(mirrored.end, 1700.0);
}

TEST(Occupancy, EaseExample) {
  const GraphLayout layout = segment_layout(400.0);
  AnimationConfig cfg = linear_cfg();
  cfg.easing = EasingSpec::ease();
  const EdgeAnimation anim = tau_edge(layout, 0, cfg);
  const TimeInterval iv = occupancy_interval(anim, cfg, 0.375);
  EXPECT_NEAR(iv.begin, 293.30066851866195, 1e-4);
  EXPECT_NEAR(iv.end, 1806.6993314813381, 1e-4);
}

TEST(Occupancy, RangeErrors) {
  const GraphLayout layout = segment_layout(400.0);
  const AnimationConfig cfg = linear_cfg();
  const EdgeAnimation anim = tau_edge(layout, 0, cfg);
  EXPECT_THROW(occupancy_interval(anim, cfg, 0.25), RangeError);
  EXPECT_THROW(occupancy_interval(anim, cfg, 0.8), RangeError);
  EXPECT_THROW(time_to_ratio(anim, cfg, 0.6), RangeError);
  EXPECT_DOUBLE_EQ(time_to_ratio(anim, cfg, 0.5), 1000.0);
}

TEST(OccupancyProperty, AgreesWithSampling) {
  const GraphLayout layout = segment_layout(300.0);
  for (const EasingSpec& easing : {EasingSpec::linear(), EasingSpec::ease()}) {
    AnimationConfig cfg = linear_cfg();
    cfg.easing = easing;
    const EdgeAnimation anim = tau_edge(layout, 0, cfg);
    for (double r = 0.26; r < 0.745; r += 0.01) {
      const TimeInterval iv = occupancy_interval(anim, cfg, r);
      const double s = std::min(r, 1.0 - r);
      double first = -1.0;
      double last = -1.0;
      for (double t = 0.0; t <= anim.total; t += 0.1) {
        if (stub_ratio_at(anim, cfg, t) >= s - 1e-12) {
          if (first < 0) first = t;
          last = t;
        }
      }
      EXPECT_NEAR(first, iv.begin, 0.11) << r;
      EXPECT_NEAR(last, iv.end, 0.11) << r;
    }
  }
}

TEST(Config, PresetsAndErrors) {
  EXPECT_EQ(preset("slowlin").easing, EasingSpec::linear());
  EXPECT_EQ(preset("fasteas").easing, EasingSpec::ease());
  EXPECT_GT(preset("fastlin").sigma_a, preset("slowlin").sigma_a);
  EXPECT_THROW(preset("medium"), UsageError);
  AnimationConfig bad;
  bad.delta0 = 0.6;
  EXPECT_THROW(validate_config(bad), ConfigError);
  bad = {};
  bad.sigma_a = 0.0;
  EXPECT_THROW(validate_config(bad), ConfigError);
}

TEST(Config, JsonRoundTrip) {
  AnimationConfig cfg = preset("sloweas");
  cfg.horizon = 12000.0;
  EXPECT_EQ(parse_config(config_to_json(cfg)), cfg);
  const AnimationConfig partial = parse_config(R"({"delta0":0.2})", preset("fastlin"));
  EXPECT_DOUBLE_EQ(partial.delta0, 0.2);
  EXPECT_DOUBLE_EQ(partial.sigma_a, preset("fastlin").sigma_a);
  EXPECT_THROW(parse_config("{"), ParseError);
}
