#include "tomoswarm/link_budget.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tomoswarm {

double radar_alpha(const ScenarioConfig& c, double area) {
  const auto& r = c.radar;
  const double four_pi = 4.0 * std::numbers::pi;
  const double num = r.sigma0.linear * area * r.p_t.linear * r.g_t.linear * r.g_r.linear *
                     r.wavelength * r.wavelength;
  const double den = four_pi * four_pi * four_pi * kBoltzmann * r.t_sys * r.b_noise *
                     r.noise_figure.linear * r.loss.linear;
  return num / den;
}

double radar_snr_pair(double rho_i, double rho_j, double alpha) {
  const double inv = 1.0 / (rho_i * rho_j);
  return alpha * inv * inv;
}

RadarSnrTable radar_snr_table(const Formation& f, const ScenarioConfig& c, double alpha) {
  RadarSnrTable t;
  t.size = static_cast<int>(f.size());
  t.alpha = alpha;
  t.snr.assign(f.size() * f.size(), 0.0);
  std::vector<double> rho(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) rho[i] = slant_range(f[i], c.target_x);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = radar_snr_pair(rho[i], rho[j], alpha);
      t.snr[i * f.size() + j] = v;
      t.snr[j * f.size() + i] = v;
    }
  return t;
}

double comm_throughput(double power, double distance, double bandwidth, double beta) {
  return bandwidth * std::log2(1.0 + power * beta / (distance * distance));
}

double min_offload_power(double distance, double bandwidth, double beta, double r_min) {
  return distance * distance / beta * std::expm1(r_min / bandwidth * std::numbers::ln2);
}

PowerAllocation allocate_min_power(const Formation& f, const MissionTimeline& t,
                                   const ScenarioConfig& c) {
  PowerAllocation a;
  a.num_uavs = static_cast<int>(f.size());
  a.num_slots = static_cast<int>(t.y.size());
  a.eta.resize(f.size() * t.y.size());
  a.energy.assign(f.size(), 0.0);
  if (c.comm.bandwidth.size() < f.size() || c.comm.beta.size() < f.size())
    throw std::invalid_argument("allocate_min_power: per-UAV comm parameters missing");

  const double p_max = c.comm.p_max.linear;
  const double budget = c.comm.e_max / c.slot_duration;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double gain = std::expm1(c.comm.r_min / c.comm.bandwidth[i] * std::numbers::ln2) /
                        c.comm.beta[i].linear;
    const double dxz2 = (f[i].x - c.gs_position[0]) * (f[i].x - c.gs_position[0]) +
                        (f[i].z - c.gs_position[2]) * (f[i].z - c.gs_position[2]);
    double sum = 0.0;
    for (std::size_t k = 0; k < t.y.size(); ++k) {
      const double dy = t.y[k] - c.gs_position[1];
      const double eta = (dxz2 + dy * dy) * gain;
      a.eta[i * t.y.size() + k] = eta;
      sum += eta;
      a.c11_violation += std::max(eta - p_max, 0.0);
      a.c12_per_slot_violation += std::max(eta - budget, 0.0);
    }
    a.energy[i] = c.slot_duration * sum;
    a.c12_violation += std::max(sum - budget, 0.0);
  }
  a.feasible = a.c11_violation == 0.0 && a.c12_violation == 0.0;
  return a;
}

PowerConstraintViolations evaluate_power_constraints(const Formation& f, const MissionTimeline& t,
                                                     const ScenarioConfig& c,
                                                     const std::vector<double>& powers) {
  const std::size_t slots = t.y.size();
  if (powers.size() != f.size() * slots)
    throw std::invalid_argument("evaluate_power_constraints: expected I*K powers");
  PowerConstraintViolations v;
  const double p_max = c.comm.p_max.linear;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double bw = c.comm.bandwidth[i];
    const double beta = c.comm.beta[i].linear;
    double energy = 0.0;
    for (std::size_t k = 0; k < slots; ++k) {
      const double p = powers[i * slots + k];
      v.g8 += std::max(p - p_max, 0.0) + std::max(-p, 0.0);
      const double d = gs_distance(f[i], t.y[k], c.gs_position);
      const double rate = comm_throughput(std::max(p, 0.0), d, bw, beta);
      if (rate < c.comm.r_min * (1.0 - kRateTolerance)) v.g9 += c.comm.r_min - rate;
      energy += p;
    }
    energy *= c.slot_duration;
    v.g10 += std::max(energy - c.comm.e_max, 0.0);
  }
  return v;
}

}  // namespace tomoswarm
