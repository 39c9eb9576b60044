#pragma once

#include <vector>

#include "tomoswarm/geometry.hpp"
#include "tomoswarm/scenario.hpp"

namespace tomoswarm {

inline constexpr double kBoltzmann = 1.380649e-23;  // J/K

/// Offloading powers eta_{i,k} (row-major, UAV-major) and their verdict.
struct PowerAllocation {
  int num_uavs = 0;
  int num_slots = 0;
  std::vector<double> eta;     // W, size I*K
  std::vector<double> energy;  // J per UAV
  bool feasible = true;
  double c11_violation = 0.0;           // sum_{i,k} [eta - P_max]^+
  double c12_violation = 0.0;           // sum_i [sum_k eta - E_max/dt]^+
  double c12_per_slot_violation = 0.0;  // sum_{i,k} [eta - E_max/dt]^+

  double at(int uav, int slot) const {
    return eta[static_cast<std::size_t>(uav) * static_cast<std::size_t>(num_slots) +
               static_cast<std::size_t>(slot)];
  }
};

/// Symmetric I x I table of linear radar SNRs.
struct RadarSnrTable {
  int size = 0;
  std::vector<double> snr;
  double alpha = 0.0;

  double at(int i, int j) const {
    return snr[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) +
               static_cast<std::size_t>(j)];
  }
};

/// alpha = sigma0 A_res P_t G_t G_r lambda^2 / ((4 pi)^3 k_b T_sys B_noise F L).
double radar_alpha(const ScenarioConfig& config, double resolution_cell_area);

/// SNR_{i,j} = alpha / (rho_i rho_j)^2.
double radar_snr_pair(double rho_i, double rho_j, double alpha);

RadarSnrTable radar_snr_table(const Formation& formation, const ScenarioConfig& config,
                              double alpha);

/// FDMA free-space throughput B log2(1 + P beta / d^2), bit/s.
double comm_throughput(double power, double distance, double bandwidth, double beta);

/// Smallest power meeting r_min: (d^2 / beta)(2^{r_min/B} - 1).
double min_offload_power(double distance, double bandwidth, double beta, double r_min);

/// Sets every slot's power to its minimum and checks the per-slot power cap
/// and the per-UAV energy budget.
PowerAllocation allocate_min_power(const Formation& formation, const MissionTimeline& timeline,
                                   const ScenarioConfig& config);

/// Per-slot power, rate and energy violations of an arbitrary allocation
/// (used by the full-dimension encoding).
struct PowerConstraintViolations {
  double g8 = 0.0;   // sum [P - P_max]^+ + sum [-P]^+, W
  double g9 = 0.0;   // sum [R_min - R]^+, bit/s
  double g10 = 0.0;  // sum_i [E_i - E_max]^+, J
  bool feasible() const { return g8 == 0.0 && g9 == 0.0 && g10 == 0.0; }
};

/// Relative slack under which a rate counts as meeting R_min; absorbs the
/// rounding of log2(1 + eta beta / d^2) at eta = eta_min.
inline constexpr double kRateTolerance = 1e-9;

PowerConstraintViolations evaluate_power_constraints(const Formation& formation,
                                                     const MissionTimeline& timeline,
                                                     const ScenarioConfig& config,
                                                     const std::vector<double>& powers);

}  // namespace tomoswarm
