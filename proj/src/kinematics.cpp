#include "med/kinematics.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "med/errors.hpp"

namespace med {

using nlohmann::json;

void validate_config(const AnimationConfig& cfg) {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!(cfg.sigma_a > 0.0) || !finite(cfg.sigma_a)) {
    throw ConfigError("sigma_a must be a positive speed");
  }
  if (!(cfg.delta0 > 0.0 && cfg.delta0 < 0.5)) {
    throw ConfigError("delta0 must lie in (0, 1/2)");
  }
  if (!(cfg.tau_half >= 0.0) || !finite(cfg.tau_half)) {
    throw ConfigError("tau_half must be non-negative");
  }
  if (!(cfg.tau_distinct >= 0.0) || !finite(cfg.tau_distinct)) {
    throw ConfigError("tau_distinct must be non-negative");
  }
  if (!(cfg.fps > 0.0) || !finite(cfg.fps)) {
    throw ConfigError("fps must be positive");
  }
  if (cfg.horizon && (!(*cfg.horizon >= 0.0) || !finite(*cfg.horizon))) {
    throw ConfigError("horizon must be a non-negative duration");
  }
  validate_easing(cfg.easing);
}

AnimationConfig preset(std::string_view name) {
  AnimationConfig cfg;
  if (name == "slowlin") {
    cfg.sigma_a = 100.0;
  } else if (name == "sloweas") {
    cfg.sigma_a = 100.0;
    cfg.easing = EasingSpec::ease();
  } else if (name == "fastlin") {
    cfg.sigma_a = 200.0;
  } else if (name == "fasteas") {
    cfg.sigma_a = 200.0;
    cfg.easing = EasingSpec::ease();
  } else {
    throw UsageError("unknown model '" + std::string(name) + "' (slowlin, sloweas, fastlin, fasteas)");
  }
  return cfg;
}

AnimationConfig parse_config(std::string_view raw, const AnimationConfig& base) {
  json doc;
  try {
    doc = json::parse(raw.begin(), raw.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("config: top level must be an object");
  }
  AnimationConfig cfg = base;
  auto number = [&](const char* key, double& out) {
    auto it = doc.find(key);
    if (it == doc.end()) return;
    if (!it->is_number()) throw ParseError(std::string("config: '") + key + "' must be a number");
    out = it->get<double>();
  };
  number("sigma_a_px_s", cfg.sigma_a);
  number("delta0", cfg.delta0);
  number("tau_half_ms", cfg.tau_half);
  number("tau_distinct_ms", cfg.tau_distinct);
  number("fps", cfg.fps);
  if (auto it = doc.find("easing"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("config: 'easing' must be a string");
    cfg.easing = parse_easing(it->get<std::string>());
  }
  if (auto it = doc.find("horizon_ms"); it != doc.end()) {
    if (it->is_null()) {
      cfg.horizon.reset();
    } else if (it->is_number()) {
      cfg.horizon = it->get<double>();
    } else {
      throw ParseError("config: 'horizon_ms' must be a number or null");
    }
  }
  validate_config(cfg);
  return cfg;
}

AnimationConfig load_config(const std::string& path, const AnimationConfig& base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read config '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), base);
}

std::string config_to_json(const AnimationConfig& cfg) {
  json doc = {
      {"sigma_a_px_s", cfg.sigma_a},
      {"delta0", cfg.delta0},
      {"tau_half_ms", cfg.tau_half},
      {"tau_distinct_ms", cfg.tau_distinct},
      {"easing", format_easing(cfg.easing)},
      {"fps", cfg.fps},
      {"horizon_ms", cfg.horizon ? json(*cfg.horizon) : json(nullptr)},
  };
  return doc.dump();
}

EdgeAnimation tau_edge(const GraphLayout& layout, std::size_t edge, const AnimationConfig& cfg) {
  const double length = edge_length(layout, edge);
  EdgeAnimation anim;
  anim.edge = edge;
  anim.tau = (0.5 - cfg.delta0) * length / cfg.sigma_a * 1000.0;
  anim.total = 2.0 * anim.tau + cfg.tau_half;
  return anim;
}

EdgeAnimation tau_edge(const GraphLayout& layout, const EdgeSpec& e, const AnimationConfig& cfg) {
  return tau_edge(layout, layout.edge_index(e), cfg);
}

double stub_ratio_at(const EdgeAnimation& anim, const AnimationConfig& cfg, double t_rel) {
  const double grow = 0.5 - cfg.delta0;
  if (t_rel <= 0.0 || t_rel >= anim.total) {
    return cfg.delta0;
  }
  if (t_rel < anim.tau) {
    return cfg.delta0 + grow * eval(cfg.easing, t_rel / anim.tau);
  }
  if (t_rel <= anim.tau + cfg.tau_half) {
    return 0.5;
  }
  const double remaining = (anim.total - t_rel) / anim.tau;
  return cfg.delta0 + grow * eval(cfg.easing, remaining < 1.0 ? remaining : 1.0);
}

double time_to_ratio(const EdgeAnimation& anim, const AnimationConfig& cfg, double ratio) {
  if (!(ratio > cfg.delta0 && ratio <= 0.5)) {
    throw RangeError("ratio " + std::to_string(ratio) + " outside (delta0, 1/2]");
  }
  if (ratio == 0.5) {
    return anim.tau;
  }
  const double progress = (ratio - cfg.delta0) / (0.5 - cfg.delta0);
  return anim.tau * invert(cfg.easing, progress < 1.0 ? progress : 1.0);
}

double occupancy_offset(const EdgeAnimation& anim, const AnimationConfig& cfg, double r_point) {
  if (!(r_point > cfg.delta0 && r_point < 1.0 - cfg.delta0)) {
    throw RangeError("point ratio " + std::to_string(r_point) + " outside (delta0, 1 - delta0)");
  }
  const double s = r_point < 1.0 - r_point ? r_point : 1.0 - r_point;
  return time_to_ratio(anim, cfg, s);
}

TimeInterval occupancy_interval(const EdgeAnimation& anim, const AnimationConfig& cfg, double r_point,
                                double start) {
  const double t_r = occupancy_offset(anim, cfg, r_point);
  return {start + t_r, start + anim.total - t_r};
}

}  // namespace med
