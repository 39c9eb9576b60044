#include "tomoswarm/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tomoswarm {

namespace {

double hinge(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace

std::map<std::string, ViolationTerm> ConstraintReport::detail() const {
  return {
      {"g1", {g1, "linear"}}, {"g2", {g2, "m"}},     {"g4", {g4, "rad"}},
      {"g5", {g5, "m"}},      {"g6", {g6, "m"}},     {"g7", {g7, "linear"}},
      {"g11", {g11, "W"}},    {"g12", {g12, "W"}},
  };
}

double resolution_cell_area(const TomoMetrics& m, const ScenarioConfig& c) {
  if (m.delta_n && m.delta_r) return *m.delta_n * *m.delta_r;
  return c.delta_n_max() * c.delta_r_max();
}

ConstraintReport evaluate_sensing_constraints(const Formation& f, const TomoMetrics& m,
                                              const ScenarioConfig& c) {
  ConstraintReport r;
  r.g1 = hinge(1.0 - c.epsilon - m.mainlobe_peak);

  // A missing null counts as a mainlobe filling the whole window.
  const double window = 2.0 * c.h_max;
  r.g2 = (m.delta_n ? hinge(*m.delta_n - c.delta_n_max()) : hinge(window - c.delta_n_max())) +
         (m.delta_r ? hinge(*m.delta_r - c.delta_r_max()) : hinge(window - c.delta_r_max()));

  std::vector<double> rho(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double theta = look_angle(f[i], c.target_x);
    r.g4 += hinge(c.theta_min() - theta) + hinge(theta - c.theta_max());
    rho[i] = slant_range(f[i], c.target_x);
    const double cos_theta = std::cos(theta);
    const double swath =
        cos_theta > 1e-9 ? c.radar.beamwidth_3db.rad * rho[i] / cos_theta : 0.0;
    r.g6 += hinge(c.min_swath - swath);
  }
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) r.g5 += hinge(c.min_separation - baseline(f[i], f[j]));

  const double alpha = radar_alpha(c, resolution_cell_area(m, c));
  const double snr_min = c.radar.snr_min.linear;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) r.g7 += hinge(snr_min - radar_snr_pair(rho[i], rho[j], alpha));

  r.feasible = r.total() == 0.0;
  return r;
}

ConstraintReport evaluate_constraints(const Formation& f, const TomoMetrics& m,
                                      const PowerAllocation& a, const ScenarioConfig& c) {
  ConstraintReport r = evaluate_sensing_constraints(f, m, c);
  r.g11 = a.c11_violation;
  r.g12 = c.numerics.energy_penalty == EnergyPenalty::per_uav ? a.c12_violation
                                                               : a.c12_per_slot_violation;
  r.feasible = r.total() == 0.0;
  return r;
}

FitnessValue penalized_fitness(bool feasible, double penalty_sum, double psl, double psl_max) {
  if (feasible) return {psl, false, psl};
  // Keep infeasible scores strictly above psl_max even for violations below
  // its rounding granularity.
  const double value = std::max(psl_max + penalty_sum,
                                std::nextafter(psl_max, std::numeric_limits<double>::infinity()));
  return {value, true, psl};
}

FitnessValue fitness(const ConstraintReport& report, double psl, double psl_max) {
  return penalized_fitness(report.feasible, report.total(), psl, psl_max);
}

}  // namespace tomoswarm
