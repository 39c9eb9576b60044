#include <chrono>

#include "swarm.hpp"
#include "tomoswarm/optimizers.hpp"

namespace tomoswarm {

OptimizationResult run_conventional_pso(const ScenarioConfig& config,
                                        const OptimizerBudget& budget, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const Evaluator evaluator(config);
  const auto box = full_encoding_box(evaluator.config());
  const detail::ScoreFn score = [&](std::span<const double> encoded) {
    return evaluator.evaluate_full(encoded).score();
  };
  const auto outcome = detail::run_swarm(box, score, budget, seed);

  const auto ev = evaluator.evaluate_full(outcome.best);
  OptimizationResult r(ev.formation);
  r.algorithm = Algorithm::pso;
  r.powers = ev.powers;
  r.num_slots = evaluator.config().num_slots;
  r.best_psl = ev.metrics.psl;
  r.best_psl_db = ev.metrics.psl_db;
  r.best_fitness = outcome.best_fitness;
  r.feasible = ev.feasible();
  r.report = ev.sensing;
  r.power_violations = ev.power;
  r.history = outcome.history;
  r.evaluations = outcome.evaluations;
  r.seed = seed;
  r.budget = budget;
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  r.wall_time_s = elapsed.count();
  return r;
}

}  // namespace tomoswarm
