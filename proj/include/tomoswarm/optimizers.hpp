#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tomoswarm/constraints.hpp"
#include "tomoswarm/geometry.hpp"
#include "tomoswarm/link_budget.hpp"
#include "tomoswarm/scenario.hpp"

namespace tomoswarm {

struct PsoSettings {
  double c1 = 2.0;
  double c2 = 2.5;
  double v_max = 1.0;
  double w_start = 0.9;
  double w_end = 0.4;
};

struct CgaSettings {
  int max_generations = 300;
  double selection_rate = 0.5;
  double blx_alpha = 0.3;
  double mutation_rate = 0.1;
  /// Mutation standard deviation as a fraction of each gene's box width.
  double mutation_sigma = 0.05;
  bool crossover = true;
};

struct GenocopSettings {
  int population = 100;
  int max_outer = 100;
  int max_inner = 300;
  double initial_temperature = 1e5;
  double temperature_decay = 0.9;
  double uniform_rate = 0.2;
  double nonuniform_rate = 0.7;
  double boundary_rate = 0.7;
  /// Shape b of the non-uniform mutation step y (1 - r^{(1 - t/T)^b}).
  double nonuniform_shape = 2.0;
  /// Inner generations without improvement before the stage ends.
  int stall_generations = 30;
  /// Total evaluation cap; 0 means iterations * population.
  long max_evaluations = 0;
};

/// M and O drive the PSO variants directly. The CGA runs
/// min(M, max_generations) generations of O individuals; GENOCOP II runs
/// min(M, max_outer) temperature stages.
struct OptimizerBudget {
  int iterations = 500;
  int population = 500;
  PsoSettings pso;
  CgaSettings cga;
  GenocopSettings genocop;

  /// Throws std::invalid_argument unless M >= 1, O >= 2 and the
  /// hyperparameters are in range.
  void validate() const;
};

enum class Algorithm { proposed, pso, cga, genocop2 };

std::string to_string(Algorithm a);
/// Accepts "proposed", "pso", "cga", "genocop2".
Algorithm parse_algorithm(const std::string& name);

struct HistoryRow {
  int iteration = 0;
  double best_fitness = 0.0;
  double best_psl_db = 0.0;
  int feasible_count = 0;
};

struct OptimizationResult {
  explicit OptimizationResult(Formation best) : best_formation(std::move(best)) {}

  Algorithm algorithm = Algorithm::proposed;
  Formation best_formation;
  /// Offloading powers (UAV-major, I*K): the minimum powers for the reduced
  /// algorithms, the encoded powers for the full-dimension PSO.
  std::vector<double> powers;
  int num_slots = 0;
  double best_psl = 1.0;
  double best_psl_db = 0.0;
  double best_fitness = 0.0;
  bool feasible = false;
  ConstraintReport report;
  /// Only meaningful for the full-dimension PSO.
  PowerConstraintViolations power_violations;
  std::vector<HistoryRow> history;
  long evaluations = 0;
  std::uint64_t seed = 0;
  double wall_time_s = 0.0;
  OptimizerBudget budget;
};

/// Dimension-reduced PSO over the 2I formation coordinates; powers follow
/// from the closed-form minimum allocation.
OptimizationResult run_proposed(const ScenarioConfig& config, const OptimizerBudget& budget,
                                std::uint64_t seed);

/// Same PSO on (K+2)I coordinates that also encode every P_{i,k}.
OptimizationResult run_conventional_pso(const ScenarioConfig& config,
                                        const OptimizerBudget& budget, std::uint64_t seed);

/// Real-coded GA with truncation selection, BLX-alpha crossover and
/// Gaussian mutation; elitist.
OptimizationResult run_cga(const ScenarioConfig& config, const OptimizerBudget& budget,
                           std::uint64_t seed);

/// Annealed-penalty evolutionary search: Genocop-I style inner runs on
/// PSL + sum(g^2) / (2 tau) with tau decreasing geometrically.
OptimizationResult run_genocop2(const ScenarioConfig& config, const OptimizerBudget& budget,
                                std::uint64_t seed);

/// BLX-alpha child: each gene uniform on [lo - alpha*I, hi + alpha*I] where
/// [lo, hi] is the parents' interval and I its length.
std::vector<double> blx_alpha_crossover(std::span<const double> a, std::span<const double> b,
                                        double alpha, std::mt19937_64& rng);

/// Inner GENOCOP II objective PSL + sum(g^2) / (2 tau).
double annealed_objective(double psl, double penalty_squares, double tau);

OptimizationResult run_algorithm(Algorithm algorithm, const ScenarioConfig& config,
                                 const OptimizerBudget& budget, std::uint64_t seed);

enum class UlaOrientation { perpendicular_to_los, vertical, along_los };

class InfeasiblePlacement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// I equally spaced UAVs on a line through a center point: perpendicular to
/// that point's line of sight, vertical, or along the line of sight. The center is
/// searched so every UAV respects the altitude bounds, preferring look
/// angles inside the bounds and the mid-range look angle.
Formation ula_formation(const ScenarioConfig& config, double spacing,
                        UlaOrientation orientation = UlaOrientation::perpendicular_to_los);

}  // namespace tomoswarm
