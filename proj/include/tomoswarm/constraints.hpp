#pragma once

#include <map>
#include <string>

#include "tomoswarm/geometry.hpp"
#include "tomoswarm/link_budget.hpp"
#include "tomoswarm/psf.hpp"
#include "tomoswarm/scenario.hpp"

namespace tomoswarm {

/// One g_l term with the unit it is expressed in.
struct ViolationTerm {
  double value = 0.0;
  std::string unit;
};

/// Hinge violations of the sensing constraints and of the reduced
/// communication constraints. C3 is enforced by the search walls.
struct ConstraintReport {
  double g1 = 0.0;   // PSF peak at the target, linear
  double g2 = 0.0;   // resolutions, m
  double g4 = 0.0;   // look angles, rad
  double g5 = 0.0;   // separation, m
  double g6 = 0.0;   // swath, m
  double g7 = 0.0;   // radar SNR, linear
  double g11 = 0.0;  // per-slot power cap, W
  double g12 = 0.0;  // energy budget, W (power-sum units)
  bool feasible = true;

  double total() const { return g1 + g2 + g4 + g5 + g6 + g7 + g11 + g12; }
  double sum_of_squares() const {
    return g1 * g1 + g2 * g2 + g4 * g4 + g5 * g5 + g6 * g6 + g7 * g7 + g11 * g11 + g12 * g12;
  }
  std::map<std::string, ViolationTerm> detail() const;
};

/// Resolution cell used in the radar constant: delta_n * delta_r when both
/// are found, otherwise delta_n^max * delta_r^max.
double resolution_cell_area(const TomoMetrics& metrics, const ScenarioConfig& config);

/// Sensing-only part (g1..g7) of the report; the communication terms are
/// left at zero.
ConstraintReport evaluate_sensing_constraints(const Formation& formation,
                                              const TomoMetrics& metrics,
                                              const ScenarioConfig& config);

ConstraintReport evaluate_constraints(const Formation& formation, const TomoMetrics& metrics,
                                      const PowerAllocation& allocation,
                                      const ScenarioConfig& config);

struct FitnessValue {
  double value = 0.0;
  bool is_penalized = false;
  double psl = 0.0;
};

/// Feasible candidates score their PSL; infeasible ones score the worst PSL
/// of the population plus the summed violations.
FitnessValue fitness(const ConstraintReport& report, double candidate_psl, double psl_max);

/// Same rule for an arbitrary penalty sum.
FitnessValue penalized_fitness(bool feasible, double penalty_sum, double candidate_psl,
                               double psl_max);

}  // namespace tomoswarm
