#include "med/renderer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "med/errors.hpp"

namespace med {

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") {
    s = "0.000";
  }
  return s;
}

const std::string& fill_for(ColorRole role, const RenderStyle& style) {
  switch (role) {
    case ColorRole::Blue:
      return style.fill_blue;
    case ColorRole::Orange:
      return style.fill_orange;
    case ColorRole::Plain:
      break;
  }
  return style.fill_plain;
}

struct Box {
  double x, y, w, h;
};

Box bounding_box(const std::vector<NodeDisk>& nodes, double margin) {
  if (nodes.empty()) {
    return {0.0, 0.0, 2.0 * margin, 2.0 * margin};
  }
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = x0;
  double x1 = -x0;
  double y1 = -x0;
  for (const NodeDisk& n : nodes) {
    x0 = std::min(x0, n.center.x - n.radius);
    y0 = std::min(y0, n.center.y - n.radius);
    x1 = std::max(x1, n.center.x + n.radius);
    y1 = std::max(y1, n.center.y + n.radius);
  }
  return {x0 - margin, y0 - margin, x1 - x0 + 2.0 * margin, y1 - y0 + 2.0 * margin};
}

std::vector<NodeDisk> node_disks(const GraphLayout& layout, const RenderStyle& style) {
  std::vector<NodeDisk> out;
  out.reserve(layout.node_count());
  for (const NodeSpec& n : layout.nodes()) {
    out.push_back({n.id, n.position, style.node_radius, n.color, n.region});
  }
  return out;
}

void open_document(std::string& out, const Box& box, const RenderStyle& style) {
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(box.w) + "\" height=\"" + num(box.h) +
         "\" viewBox=\"" + num(box.x) + " " + num(box.y) + " " + num(box.w) + " " + num(box.h) + "\">\n";
  out += "<rect x=\"" + num(box.x) + "\" y=\"" + num(box.y) + "\" width=\"" + num(box.w) + "\" height=\"" +
         num(box.h) + "\" fill=\"" + style.background + "\"/>\n";
}

void append_halos(std::string& out, const std::vector<NodeDisk>& nodes, const RenderStyle& style) {
  bool any = std::any_of(nodes.begin(), nodes.end(), [](const NodeDisk& n) { return n.region != Region::None; });
  if (!any) return;
  out += "<g stroke=\"none\">\n";
  for (const NodeDisk& n : nodes) {
    if (n.region == Region::None) continue;
    const std::string& tint = n.region == Region::A ? style.region_tint_a : style.region_tint_b;
    out += "<circle cx=\"" + num(n.center.x) + "\" cy=\"" + num(n.center.y) + "\" r=\"" + num(2.0 * n.radius) +
           "\" fill=\"" + tint + "\"/>\n";
  }
  out += "</g>\n";
}

void append_nodes(std::string& out, const std::vector<NodeDisk>& nodes, const RenderStyle& style) {
  if (nodes.empty()) return;
  out += "<g stroke=\"" + style.stroke + "\" stroke-width=\"" + num(style.stroke_width) + "\">\n";
  for (const NodeDisk& n : nodes) {
    out += "<circle cx=\"" + num(n.center.x) + "\" cy=\"" + num(n.center.y) + "\" r=\"" + num(n.radius) +
           "\" fill=\"" + fill_for(n.color, style) + "\"/>\n";
  }
  out += "</g>\n";
}

std::string line(Point a, Point b) {
  return "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" + num(b.y) + "\"/>\n";
}

/// Stub ratio of schedule edge `es` at time t.
double ratio_at(const EdgeSchedule& es, const AnimationConfig& cfg, double t) {
  auto it = std::upper_bound(es.starts.begin(), es.starts.end(), t);
  if (it == es.starts.begin()) {
    return cfg.delta0;
  }
  const double start = *std::prev(it);
  if (t - start >= es.animation.total) {
    return cfg.delta0;
  }
  return stub_ratio_at(es.animation, cfg, t - start);
}

}  // namespace

FrameGeometry sample_frame(const GraphLayout& layout, const AnimationConfig& cfg, const Schedule& schedule,
                           double t, const RenderStyle& style) {
  if (!(t >= 0.0)) {
    throw RangeError("frame time must be non-negative");
  }
  if (schedule.edges.size() != layout.edge_count()) {
    throw UsageError("schedule does not belong to this layout");
  }
  FrameGeometry frame;
  frame.timestamp = t;
  frame.stubs.reserve(layout.edge_count());
  for (std::size_t e = 0; e < layout.edge_count(); ++e) {
    frame.stubs.push_back(stub_pair(layout, e, ratio_at(schedule.edges[e], cfg, t), cfg.delta0));
  }
  frame.nodes = node_disks(layout, style);
  return frame;
}

std::string frame_to_svg(const FrameGeometry& frame, const RenderStyle& style) {
  std::string out;
  open_document(out, bounding_box(frame.nodes, style.margin), style);
  append_halos(out, frame.nodes, style);
  if (!frame.stubs.empty()) {
    out += "<g stroke=\"" + style.stroke + "\" stroke-width=\"" + num(style.stroke_width) + "\">\n";
    for (const StubPair& sp : frame.stubs) {
      if (sp.ratio >= 0.5) {
        out += line(sp.at_source.a, sp.at_target.a);
      } else {
        out += line(sp.at_source.a, sp.at_source.b);
        out += line(sp.at_target.a, sp.at_target.b);
      }
    }
    out += "</g>\n";
  }
  append_nodes(out, frame.nodes, style);
  out += "</svg>\n";
  return out;
}

std::vector<double> frame_times(double makespan, double fps) {
  if (!(fps > 0.0)) {
    throw ConfigError("fps must be positive");
  }
  // Guard against makespan * fps / 1000 landing a hair above an integer.
  const double exact = makespan * fps / 1000.0;
  double last = std::ceil(exact);
  if (last - exact > 1.0 - 1e-9) {
    last -= 1.0;
  }
  std::vector<double> out;
  const auto count = static_cast<std::size_t>(std::max(0.0, last)) + 1;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(static_cast<double>(k) * 1000.0 / fps);
  }
  return out;
}

std::string animation_svg(const GraphLayout& layout, const AnimationConfig& cfg, const Schedule& schedule,
                          const RenderStyle& style) {
  const std::vector<double> times = frame_times(schedule.makespan, cfg.fps);
  const std::vector<NodeDisk> nodes = node_disks(layout, style);
  std::string out;
  open_document(out, bounding_box(nodes, style.margin), style);
  append_halos(out, nodes, style);

  const double duration = times.back();
  std::string key_times;
  if (duration > 0.0) {
    for (std::size_t k = 0; k < times.size(); ++k) {
      if (k > 0) key_times += ";";
      key_times += k + 1 == times.size() ? std::string("1") : num(times[k] / duration);
    }
  }

  if (layout.edge_count() > 0) {
    out += "<g stroke=\"" + style.stroke + "\" stroke-width=\"" + num(style.stroke_width) + "\">\n";
    for (std::size_t e = 0; e < layout.edge_count(); ++e) {
      std::vector<StubPair> keys;
      keys.reserve(times.size());
      for (double t : times) {
        keys.push_back(stub_pair(layout, e, ratio_at(schedule.edges[e], cfg, t), cfg.delta0));
      }
      for (int side = 0; side < 2; ++side) {
        auto seg = [&](const StubPair& sp) -> const Segment& { return side == 0 ? sp.at_source : sp.at_target; };
        const Segment& rest = seg(keys.front());
        out += "<line x1=\"" + num(rest.a.x) + "\" y1=\"" + num(rest.a.y) + "\" x2=\"" + num(rest.b.x) +
               "\" y2=\"" + num(rest.b.y) + "\"";
        if (duration <= 0.0) {
          out += "/>\n";
          continue;
        }
        out += ">\n";
        for (int axis = 0; axis < 2; ++axis) {
          std::string values;
          for (std::size_t k = 0; k < keys.size(); ++k) {
            if (k > 0) values += ";";
            values += num(axis == 0 ? seg(keys[k]).b.x : seg(keys[k]).b.y);
          }
          out += std::string("<animate attributeName=\"") + (axis == 0 ? "x2" : "y2") + "\" dur=\"" +
                 num(duration / 1000.0) + "s\" repeatCount=\"indefinite\" calcMode=\"linear\" keyTimes=\"" +
                 key_times + "\" values=\"" + values + "\"/>\n";
        }
        out += "</line>\n";
      }
    }
    out += "</g>\n";
  }
  append_nodes(out, nodes, style);
  out += "</svg>\n";
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write '" + path.string() + "'");
  }
  out << text;
  out.flush();
  if (!out) {
    throw IoError("failed writing '" + path.string() + "'");
  }
}

ExportResult export_animation(const GraphLayout& layout, const AnimationConfig& cfg, const Schedule& schedule,
                              const std::filesystem::path& out_dir, const ExportOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());
  }
  ExportResult result;
  if (options.frames) {
    const std::vector<double> times = frame_times(schedule.makespan, cfg.fps);
    for (std::size_t k = 0; k < times.size(); ++k) {
      char name[32];
      std::snprintf(name, sizeof(name), "frame_%06zu.svg", k);
      const auto path = out_dir / name;
      write_text_file(path, frame_to_svg(sample_frame(layout, cfg, schedule, times[k], options.style), options.style));
      result.files.push_back(path);
    }
    result.frame_count = times.size();
  }
  if (options.animated) {
    const auto path = out_dir / "animation.svg";
    write_text_file(path, animation_svg(layout, cfg, schedule, options.style));
    result.files.push_back(path);
  }
  return result;
}

}  // namespace med
