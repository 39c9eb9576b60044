#include <chrono>

#include "swarm.hpp"
#include "tomoswarm/optimizers.hpp"

namespace tomoswarm {

namespace detail {

OptimizationResult reduced_result(Algorithm algorithm, const Evaluator& evaluator,
                                  const SearchOutcome& outcome, const OptimizerBudget& budget,
                                  std::uint64_t seed, double wall_time_s) {
  auto ev = evaluator.evaluate_flat(outcome.best, true);
  OptimizationResult r(ev.formation);
  r.algorithm = algorithm;
  r.powers = ev.allocation.eta;
  r.num_slots = ev.allocation.num_slots;
  r.best_psl = ev.metrics.psl;
  r.best_psl_db = ev.metrics.psl_db;
  r.best_fitness = outcome.best_fitness;
  r.feasible = ev.report.feasible;
  r.report = ev.report;
  r.history = outcome.history;
  r.evaluations = outcome.evaluations;
  r.seed = seed;
  r.wall_time_s = wall_time_s;
  r.budget = budget;
  return r;
}

}  // namespace detail

OptimizationResult run_proposed(const ScenarioConfig& config, const OptimizerBudget& budget,
                                std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const Evaluator evaluator(config);
  const auto box = formation_box(evaluator.config());
  const detail::ScoreFn score = [&](std::span<const double> xz) {
    return evaluator.evaluate_flat(xz).score();
  };
  const auto outcome = detail::run_swarm(box, score, budget, seed);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return detail::reduced_result(Algorithm::proposed, evaluator, outcome, budget, seed,
                                elapsed.count());
}

}  // namespace tomoswarm
