#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "med/graph_model.hpp"
#include "med/kinematics.hpp"
#include "med/scheduler.hpp"

namespace med {

struct RenderStyle {
  double node_radius = 7.0;
  double stroke_width = 2.0;
  double margin = 10.0;
  std::string fill_plain = "#808080";
  std::string fill_blue = "#1f77b4";
  std::string fill_orange = "#ff7f0e";
  std::string stroke = "#000000";
  std::string background = "#ffffff";
  // Halos behind nodes of the two highlighted regions.
  std::string region_tint_a = "#ffd54f";
  std::string region_tint_b = "#9ad0a6";
};

struct NodeDisk {
  std::string id;
  Point center;
  double radius = 7.0;
  ColorRole color = ColorRole::Plain;
  Region region = Region::None;
};

/// Everything visible at one instant.
struct FrameGeometry {
  double timestamp = 0.0;
  std::vector<StubPair> stubs;  // layout edge order
  std::vector<NodeDisk> nodes;  // layout node order
};

/// Throws RangeError for t < 0.
FrameGeometry sample_frame(const GraphLayout& layout, const AnimationConfig& cfg, const Schedule& schedule,
                           double t, const RenderStyle& style = {});

/// Standalone SVG document of one frame; nodes are drawn over edges.
std::string frame_to_svg(const FrameGeometry& frame, const RenderStyle& style = {});

/// Frame timestamps k * 1000 / fps for k = 0 .. ceil(makespan * fps / 1000).
std::vector<double> frame_times(double makespan, double fps);

/// One self-contained SVG whose stub endpoints are keyframed at the frame
/// timestamps and loop indefinitely.
std::string animation_svg(const GraphLayout& layout, const AnimationConfig& cfg, const Schedule& schedule,
                          const RenderStyle& style = {});

struct ExportOptions {
  bool frames = true;
  bool animated = false;
  RenderStyle style;
};

struct ExportResult {
  std::size_t frame_count = 0;
  std::vector<std::filesystem::path> files;
};

/// Writes frame_%06d.svg files and/or animation.svg into `out_dir`
/// (created if missing). Throws IoError when writing fails.
ExportResult export_animation(const GraphLayout& layout, const AnimationConfig& cfg, const Schedule& schedule,
                              const std::filesystem::path& out_dir, const ExportOptions& options = {});

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace med
