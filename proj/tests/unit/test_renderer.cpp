#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "med/errors.hpp"
#include "med/renderer.hpp"

using namespace med;

namespace {

GraphLayout plus_layout() {
  return GraphLayout({{"a", {0, 200}}, {"b", {400, 200}}, {"c", {200, 0}}, {"d", {200, 400}}},
                     {EdgeSpec("a", "b"), EdgeSpec("c", "d")});
}

GraphLayout five_nodes() {
  return GraphLayout({{"a", {0, 0}, ColorRole::Blue},
                      {"b", {200, 0}, ColorRole::Orange},
                      {"c", {200, 150}},
                      {"d", {0, 150}, ColorRole::Plain, Region::A},
                      {"e", {100, 260}, ColorRole::Plain, Region::B}},
                     {EdgeSpec("a", "b"), EdgeSpec("b", "c"), EdgeSpec("c", "d"), EdgeSpec("a", "c"),
                      EdgeSpec("b", "d"), EdgeSpec("d", "e")});
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(SampleFrame, InitialFrameShowsRestingStubs) {
  const GraphLayout layout = plus_layout();
  const AnimationConfig cfg = preset("slowlin");
  const Schedule s = compute_schedule(layout, cfg);
  const FrameGeometry f = sample_frame(layout, cfg, s, 0.0);
  ASSERT_EQ(f.stubs.size(), 2u);
  EXPECT_DOUBLE_EQ(f.stubs[0].ratio, 0.25);
  EXPECT_DOUBLE_EQ(f.stubs[1].ratio, 0.25);
  EXPECT_DOUBLE_EQ(sample_frame(layout, cfg, s, 1000.0).stubs[0].ratio, 0.5);
  EXPECT_THROW(sample_frame(layout, cfg, s, -1.0), RangeError);
}

TEST(FrameSvg, Structure) {
  const GraphLayout layout = plus_layout();
  const AnimationConfig cfg = preset("slowlin");
  const Schedule s = compute_schedule(layout, cfg);
  const std::string rest = frame_to_svg(sample_frame(layout, cfg, s, 0.0));
  EXPECT_EQ(count(rest, "<line"), 4u);
  EXPECT_EQ(count(rest, "<circle"), 4u);
  EXPECT_NE(rest.find("viewBox=\"-17.000 -17.000 434.000 434.000\""), std::string::npos) << rest;
  EXPECT_NE(rest.find("x1=\"0.000\" y1=\"200.000\" x2=\"100.000\" y2=\"200.000\""), std::string::npos);
  const std::string full = frame_to_svg(sample_frame(layout, cfg, s, 1050.0));
  EXPECT_EQ(count(full, "<line"), 3u);
  EXPECT_LT(full.rfind("<line"), full.find("<circle"));
}

TEST(FrameTimes, CountMatchesCeil) {
  EXPECT_EQ(frame_times(2250.0, 30.0).size(), 69u);
  EXPECT_EQ(frame_times(1000.0, 30.0).size(), 31u);
  EXPECT_EQ(frame_times(0.0, 30.0).size(), 1u);
  EXPECT_THROW(frame_times(100.0, 0.0), ConfigError);
}

TEST(Export, FramesAndAnimated) {
  const GraphLayout layout = plus_layout();
  const AnimationConfig cfg = preset("slowlin");
  const Schedule s = compute_schedule(layout, cfg);
  const auto dir = std::filesystem::temp_directory_path() / "medkit_render_test";
  std::filesystem::remove_all(dir);
  ExportOptions opt;
  opt.animated = true;
  const ExportResult r = export_animation(layout, cfg, s, dir, opt);
  EXPECT_EQ(r.frame_count, 69u);
  EXPECT_TRUE(std::filesystem::exists(dir / "frame_000068.svg"));
  const std::string anim = read_file(dir / "animation.svg");
  EXPECT_EQ(count(anim, "<animate "), 8u);
  EXPECT_NE(anim.find("repeatCount=\"indefinite\""), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Golden, FiveNodeFrame) {
  const GraphLayout layout = five_nodes();
  const AnimationConfig cfg = preset("slowlin");
  const Schedule s = compute_schedule(layout, cfg);
  const std::string svg = frame_to_svg(sample_frame(layout, cfg, s, 900.0));
  const auto golden = std::filesystem::path(MEDKIT_TEST_DATA) / "five_nodes_t900.svg";
  if (std::getenv("MEDKIT_UPDATE_GOLDEN")) {
    write_text_file(golden, svg);
  }
  EXPECT_EQ(svg, read_file(golden));
}
