#include <cmath>
#include <limits>
#include <optional>
#include <tuple>

#include "tomoswarm/constraints.hpp"
#include "tomoswarm/optimizers.hpp"

namespace tomoswarm {

namespace {

std::vector<Point2> line_through(const ScenarioConfig& c, double theta, double rho,
                                 double spacing, UlaOrientation orientation) {
  const Point2 center{c.target_x - rho * std::sin(theta), rho * std::cos(theta)};
  // Unit vector along the array.
  double ex = 0.0;
  double ez = 1.0;
  if (orientation == UlaOrientation::perpendicular_to_los) {
    ex = std::cos(theta);
    ez = std::sin(theta);
  } else if (orientation == UlaOrientation::along_los) {
    ex = -std::sin(theta);
    ez = std::cos(theta);
  }
  std::vector<Point2> pts;
  const double mid = 0.5 * static_cast<double>(c.num_uavs - 1);
  for (int i = 0; i < c.num_uavs; ++i) {
    const double t = (static_cast<double>(i) - mid) * spacing;
    pts.push_back({center.x + t * ex, center.z + t * ez});
  }
  return pts;
}

}  // namespace

Formation ula_formation(const ScenarioConfig& config, double spacing, UlaOrientation orientation) {
  if (!(spacing > 0.0) || !std::isfinite(spacing))
    throw std::invalid_argument("ula spacing must be positive");
  ScenarioConfig c = config;
  broadcast_per_uav(c);
  validate(c);

  // Geometric terms only: resolutions are set to their limits so the radar
  // constant uses the largest admissible cell.
  TomoMetrics nominal;
  nominal.delta_n = c.delta_n_max();
  nominal.delta_r = c.delta_r_max();
  nominal.mainlobe_peak = 1.0;

  const double theta_mid = 0.5 * (c.theta_min() + c.theta_max());
  const double rho_hi = c.z_max() / std::max(std::cos(c.theta_max()), 1e-3) +
                        spacing * static_cast<double>(c.num_uavs);
  constexpr int kAngles = 181;
  constexpr int kRanges = 400;
  std::optional<std::vector<Point2>> best;
  std::tuple<double, double, double> best_key{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  for (int a = 0; a < kAngles; ++a) {
    const double theta = c.theta_min() + (c.theta_max() - c.theta_min()) * a / (kAngles - 1);
    for (int r = 1; r <= kRanges; ++r) {
      const double rho = rho_hi * r / kRanges;
      auto pts = line_through(c, theta, rho, spacing, orientation);
      bool inside = true;
      for (const auto& p : pts) inside = inside && p.z >= c.z_min() && p.z <= c.z_max();
      if (!inside) continue;
      const Formation f(pts);
      const auto report = evaluate_sensing_constraints(f, nominal, c);
      const std::tuple<double, double, double> key{report.g4, report.total(),
                                                   std::abs(theta - theta_mid)};
      if (!best || key < best_key) {
        best_key = key;
        best = std::move(pts);
      }
    }
  }
  if (!best) throw InfeasiblePlacement("ula: no placement satisfies the altitude bounds");
  return Formation(*best);
}

}  // namespace tomoswarm
