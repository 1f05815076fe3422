#include "med/easing.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "med/errors.hpp"

namespace med {

namespace {

/// Cubic with P0 = 0, P3 = 1 in power form: ((a p + b) p + c) p.
struct Cubic {
  double a, b, c;

  Cubic(double c1, double c2) : c(3.0 * c1) {
    b = 3.0 * (c2 - c1) - c;
    a = 1.0 - c - b;
  }

  double value(double p) const { return ((a * p + b) * p + c) * p; }
  double slope(double p) const { return (3.0 * a * p + 2.0 * b) * p + c; }
};

/// Finds p in [0,1] with f.value(p) = target for a non-decreasing cubic.
/// Newton steps are taken while they stay inside the bracket; otherwise the
/// bracket is bisected. Stops once |f(p) - target| <= tolerance or the
/// bracket collapses.
double solve_parameter(const Cubic& f, double target, double tolerance) {
  // Coarse sample table for the starting guess.
  constexpr int kSamples = 11;
  std::array<double, kSamples> table{};
  for (int i = 0; i < kSamples; ++i) {
    table[i] = f.value(static_cast<double>(i) / (kSamples - 1));
  }
  int seg = 0;
  while (seg < kSamples - 2 && table[seg + 1] <= target) {
    ++seg;
  }
  const double step = 1.0 / (kSamples - 1);
  double lo = seg * step;
  double hi = lo + step;
  const double span = table[seg + 1] - table[seg];
  double p = span > 0.0 ? lo + step * (target - table[seg]) / span : 0.5 * (lo + hi);

  for (int iter = 0; iter < 200; ++iter) {
    const double err = f.value(p) - target;
    if (std::abs(err) <= tolerance) {
      break;
    }
    if (err < 0.0) {
      lo = p;
    } else {
      hi = p;
    }
    if (hi - lo <= 1e-16) {
      break;
    }
    const double d = f.slope(p);
    double next = 0.5 * (lo + hi);
    if (d > 1e-9) {
      const double newton = p - err / d;
      if (newton > lo && newton < hi) {
        next = newton;
      }
    }
    if (next == p) {
      break;
    }
    p = next;
  }
  return p;
}

void require_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw RangeError(std::string(what) + " = " + std::to_string(v) + " outside [0,1]");
  }
}

/// eta without clamping; only boundaries are special-cased.
double eval_raw(const EasingSpec& spec, double rho_t) {
  if (rho_t <= 0.0) return 0.0;
  if (rho_t >= 1.0) return 1.0;
  if (spec.kind == EasingSpec::Kind::Linear) return rho_t;
  const double p = solve_parameter(Cubic(spec.x1, spec.x2), rho_t, spec.tolerance);
  return Cubic(spec.y1, spec.y2).value(p);
}

std::string shortest(double v) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

double parse_number(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("easing: bad number '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

EasingSpec EasingSpec::cubic_bezier(double x1, double y1, double x2, double y2) {
  EasingSpec s;
  s.kind = Kind::CubicBezier;
  s.x1 = x1;
  s.y1 = y1;
  s.x2 = x2;
  s.y2 = y2;
  return s;
}

EasingSpec parse_easing(std::string_view text) {
  if (text == "linear") {
    return EasingSpec::linear();
  }
  if (text == "ease") {
    return EasingSpec::ease();
  }
  constexpr std::string_view prefix = "cubic-bezier:";
  if (!text.starts_with(prefix)) {
    throw ParseError("easing: expected 'linear', 'ease' or 'cubic-bezier:x1,y1,x2,y2', got '" +
                     std::string(text) + "'");
  }
  text.remove_prefix(prefix.size());
  std::vector<double> values;
  while (true) {
    const auto comma = text.find(',');
    values.push_back(parse_number(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (values.size() != 4) {
    throw ParseError("easing: cubic-bezier needs exactly 4 numbers");
  }
  EasingSpec spec = EasingSpec::cubic_bezier(values[0], values[1], values[2], values[3]);
  validate_easing(spec);
  return spec;
}

std::string format_easing(const EasingSpec& spec) {
  if (spec.kind == EasingSpec::Kind::Linear) {
    return "linear";
  }
  return "cubic-bezier:" + shortest(spec.x1) + "," + shortest(spec.y1) + "," + shortest(spec.x2) + "," +
         shortest(spec.y2);
}

void validate_easing(const EasingSpec& spec) {
  if (!(spec.tolerance > 0.0)) {
    throw ConfigError("easing: solver tolerance must be positive");
  }
  if (spec.kind == EasingSpec::Kind::Linear) {
    return;
  }
  for (double v : {spec.x1, spec.y1, spec.x2, spec.y2}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ConfigError("easing: control values must lie in [0,1] (" + format_easing(spec) + ")");
    }
  }
  const MonotoneReport report = verify_monotone(spec);
  if (!report.passed) {
    throw ConfigError("easing: " + report.message);
  }
}

CurvePoint bezier_xy(const EasingSpec& spec, double p) {
  if (spec.kind != EasingSpec::Kind::CubicBezier) {
    throw UsageError("bezier_xy: easing is not a cubic Bezier");
  }
  require_unit(p, "curve parameter");
  return {Cubic(spec.x1, spec.x2).value(p), Cubic(spec.y1, spec.y2).value(p)};
}

double eval(const EasingSpec& spec, double rho_t) {
  require_unit(rho_t, "time ratio");
  const double v = eval_raw(spec, rho_t);
  return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

double invert(const EasingSpec& spec, double rho_a) {
  require_unit(rho_a, "progress ratio");
  if (rho_a == 0.0) return 0.0;
  if (rho_a == 1.0) return 1.0;
  if (spec.kind == EasingSpec::Kind::Linear) return rho_a;
  // Solve y(p) = rho_a to full precision, then map through x.
  const double p = solve_parameter(Cubic(spec.y1, spec.y2), rho_a, 0.0);
  const double t = Cubic(spec.x1, spec.x2).value(p);
  return t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
}

MonotoneReport verify_monotone(const EasingSpec& spec, std::size_t grid_points) {
  MonotoneReport report;
  if (grid_points < 2) {
    grid_points = 2;
  }
  if (spec.kind == EasingSpec::Kind::CubicBezier) {
    for (double v : {spec.x1, spec.x2}) {
      if (!(v >= 0.0 && v <= 1.0)) {
        report.passed = false;
        report.message = "x control outside [0,1]; the curve is not a function of time";
        return report;
      }
    }
  }
  const double n = static_cast<double>(grid_points - 1);
  double prev_t = 0.0;
  double prev = eval_raw(spec, 0.0);
  if (prev != 0.0 || eval_raw(spec, 1.0) != 1.0) {
    report.passed = false;
    report.message = "endpoints are not exact";
    return report;
  }
  for (std::size_t i = 1; i < grid_points; ++i) {
    const double t = i == grid_points - 1 ? 1.0 : static_cast<double>(i) / n;
    const double v = eval_raw(spec, t);
    const bool in_range = v >= 0.0 && v <= 1.0;
    if (!in_range || !(v > prev)) {
      report.passed = false;
      report.index = i - 1;
      report.rho_t0 = prev_t;
      report.eta0 = prev;
      report.rho_t1 = t;
      report.eta1 = v;
      report.message = std::string(in_range ? "not strictly increasing" : "leaves [0,1]") + " between rho_t=" +
                       shortest(prev_t) + " (eta=" + shortest(prev) + ") and rho_t=" + shortest(t) +
                       " (eta=" + shortest(v) + ")";
      return report;
    }
    prev_t = t;
    prev = v;
  }
  report.message = "strictly increasing on " + std::to_string(grid_points) + " samples";
  return report;
}

}  // namespace med
