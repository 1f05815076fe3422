#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace med {

/// An easing function eta: [0,1] -> [0,1] mapping elapsed-time ratio to
/// animation progress. Cubic Bezier easings fix P0=(0,0) and P3=(1,1).
struct EasingSpec {
  enum class Kind { Linear, CubicBezier };

  Kind kind = Kind::Linear;
  double x1 = 0.0;
  double y1 = 0.0;
  double x2 = 1.0;
  double y2 = 1.0;
  /// Tolerance on |x(p) - rho_t| when solving for the curve parameter.
  double tolerance = 1e-7;

  static EasingSpec linear() { return {}; }
  static EasingSpec cubic_bezier(double x1, double y1, double x2, double y2);
  /// The standard "ease" curve, cubic-bezier(0.25, 0.1, 0.25, 1).
  static EasingSpec ease() { return cubic_bezier(0.25, 0.1, 0.25, 1.0); }

  bool operator==(const EasingSpec&) const = default;
};

/// Parses "linear", "ease" or "cubic-bezier:x1,y1,x2,y2".
/// Throws ParseError on syntax errors, ConfigError on rejected curves.
EasingSpec parse_easing(std::string_view text);
/// Inverse of parse_easing; "ease" is written in its expanded form.
std::string format_easing(const EasingSpec& spec);

/// Throws ConfigError unless x1,x2,y1,y2 are in [0,1] and the sampled
/// curve is strictly increasing.
void validate_easing(const EasingSpec& spec);

struct CurvePoint {
  double rho_t;
  double rho_a;
};

/// Point of the cubic Bezier at parameter p. Throws RangeError for p outside
/// [0,1] and UsageError for a Linear spec.
CurvePoint bezier_xy(const EasingSpec& spec, double p);

/// eta(rho_t), clamped to [0,1]; exact at both boundaries.
double eval(const EasingSpec& spec, double rho_t);

/// eta^-1(rho_a); exact at both boundaries.
double invert(const EasingSpec& spec, double rho_a);

struct MonotoneReport {
  bool passed = true;
  /// First offending grid pair (index i and i+1) when !passed.
  std::optional<std::size_t> index;
  double rho_t0 = 0.0;
  double eta0 = 0.0;
  double rho_t1 = 0.0;
  double eta1 = 0.0;
  std::string message;
};

inline constexpr std::size_t kMonotoneGridPoints = 10'000;

/// Samples eta on a uniform grid and checks strict increase, range and
/// exact endpoints. Never throws for well-formed x controls.
MonotoneReport verify_monotone(const EasingSpec& spec, std::size_t grid_points = kMonotoneGridPoints);

}  // namespace med
