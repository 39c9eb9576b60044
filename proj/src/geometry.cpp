#include "tomoswarm/geometry.hpp"

#include <cmath>
#include <string>

namespace tomoswarm {

namespace {

void check_points(const std::vector<Point2>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i].x) || !std::isfinite(p[i].z))
      throw std::invalid_argument("formation: non-finite coordinate for UAV " +
                                  std::to_string(i + 1));
    if (!(p[i].z > 0.0))
      throw std::invalid_argument("formation: altitude must be positive for UAV " +
                                  std::to_string(i + 1));
  }
}

}  // namespace

Formation::Formation(std::vector<Point2> positions) : positions_(std::move(positions)) {
  if (positions_.size() < 2) throw std::invalid_argument("formation: at least 2 UAVs required");
  check_points(positions_);
}

Formation Formation::from_flat(std::span<const double> xz) {
  if (xz.size() % 2 != 0) throw std::invalid_argument("formation: odd coordinate count");
  std::vector<Point2> p(xz.size() / 2);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = {xz[2 * i], xz[2 * i + 1]};
  return Formation(std::move(p));
}

Formation Formation::unchecked(std::vector<Point2> positions) {
  if (positions.empty()) throw std::invalid_argument("formation: empty");
  check_points(positions);
  Formation f;
  f.positions_ = std::move(positions);
  return f;
}

std::vector<double> Formation::flat() const {
  std::vector<double> out;
  out.reserve(2 * positions_.size());
  for (const auto& p : positions_) {
    out.push_back(p.x);
    out.push_back(p.z);
  }
  return out;
}

MissionTimeline MissionTimeline::from_config(const ScenarioConfig& c) {
  MissionTimeline t;
  t.slot_duration = c.slot_duration;
  t.speed = c.swarm_speed;
  t.y.resize(static_cast<std::size_t>(c.num_slots));
  const double step = c.swarm_speed * c.slot_duration;
  for (std::size_t k = 0; k < t.y.size(); ++k) t.y[k] = static_cast<double>(k) * step;
  return t;
}

LocalAxes LocalAxes::from_reference(const Point2& ref, double target_x) {
  LocalAxes a;
  a.theta_ref = look_angle(ref, target_x);
  a.target_x = target_x;
  a.cos_ref = std::cos(a.theta_ref);
  a.sin_ref = std::sin(a.theta_ref);
  return a;
}

double slant_range(const Point2& q, double target_x) { return std::hypot(q.x - target_x, q.z); }

double look_angle(const Point2& q, double target_x) { return std::atan((target_x - q.x) / q.z); }

double swath_width(const Point2& q, const ScenarioConfig& config) {
  const double c = std::cos(look_angle(q, config.target_x));
  if (c <= 1e-9) throw DegenerateGeometry("swath_width: look angle too close to 90 deg");
  return config.radar.beamwidth_3db.rad * slant_range(q, config.target_x) / c;
}

double baseline(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.z - b.z); }

double gs_distance(const Point2& q, double y_k, const std::array<double, 3>& gs) {
  const double dx = q.x - gs[0];
  const double dy = y_k - gs[1];
  const double dz = q.z - gs[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double max_baseline(const Formation& f) {
  double b = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) b = std::max(b, baseline(f[i], f[j]));
  return b;
}

}  // namespace tomoswarm
