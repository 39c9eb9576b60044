#pragma once

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "tomoswarm/scenario.hpp"

namespace tomoswarm {

/// A point in the across-track (x, z) plane, meters.
struct Point2 {
  double x = 0.0;
  double z = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Across-track UAV positions; element 0 is the reference UAV.
class Formation {
 public:
  /// Throws std::invalid_argument unless there are at least two finite
  /// points with positive altitude.
  explicit Formation(std::vector<Point2> positions);

  /// Interprets a flat (x1, z1, x2, z2, ...) vector.
  static Formation from_flat(std::span<const double> xz);
  /// Same checks as the constructor except the minimum size; used for
  /// degenerate single-UAV evaluations in tests.
  static Formation unchecked(std::vector<Point2> positions);

  std::size_t size() const { return positions_.size(); }
  const Point2& operator[](std::size_t i) const { return positions_[i]; }
  const std::vector<Point2>& positions() const { return positions_; }
  const Point2& reference() const { return positions_.front(); }
  std::vector<double> flat() const;

  friend bool operator==(const Formation&, const Formation&) = default;

 private:
  Formation() = default;
  std::vector<Point2> positions_;
};

/// Azimuth positions y[k] = k * v_y * dt for k = 0..K-1.
struct MissionTimeline {
  std::vector<double> y;
  double slot_duration = 1.0;
  double speed = 0.0;

  static MissionTimeline from_config(const ScenarioConfig& config);
};

/// Slant-range (r) and normal (n) axes through the target point p_t,
/// defined by the reference UAV's line of sight.
struct LocalAxes {
  double theta_ref = 0.0;  // reference look angle, rad
  double target_x = 0.0;   // p_t = (target_x, 0)
  double cos_ref = 1.0;
  double sin_ref = 0.0;

  static LocalAxes from_reference(const Point2& reference, double target_x);
  static LocalAxes from_formation(const Formation& f, double target_x) {
    return from_reference(f.reference(), target_x);
  }
};

/// Raised by swath_width when the look angle is too close to +-90 deg.
class DegenerateGeometry : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

double slant_range(const Point2& q, double target_x);
/// Positive when the UAV is left of the target (x < x_t).
double look_angle(const Point2& q, double target_x);
double swath_width(const Point2& q, const ScenarioConfig& config);
double baseline(const Point2& a, const Point2& b);

/// r_i(n): distance to the point at offset n along the normal axis.
inline double range_to_elevation_point(const Point2& q, const LocalAxes& axes, double n) {
  const double dx = q.x - (axes.target_x + n * axes.cos_ref);
  const double dz = q.z - n * axes.sin_ref;
  return std::sqrt(dx * dx + dz * dz);
}

/// l_i(r): distance to the point at offset r along the slant-range axis.
inline double range_to_slant_point(const Point2& q, const LocalAxes& axes, double r) {
  const double dx = q.x - (axes.target_x + r * axes.sin_ref);
  const double dz = q.z + r * axes.cos_ref;
  return std::sqrt(dx * dx + dz * dz);
}

/// d_{i,k}: distance from a UAV at (x, y_k, z) to the ground station.
double gs_distance(const Point2& q, double y_k, const std::array<double, 3>& gs);

/// Largest pairwise baseline.
double max_baseline(const Formation& f);

}  // namespace tomoswarm
