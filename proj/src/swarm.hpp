#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tomoswarm/evaluation.hpp"
#include "tomoswarm/optimizers.hpp"
#include "tomoswarm/pso.hpp"

namespace tomoswarm::detail {

using ScoreFn = std::function<CandidateScore(std::span<const double>)>;

struct SearchOutcome {
  std::vector<double> best;
  CandidateScore best_score;
  double best_fitness = 0.0;
  std::vector<HistoryRow> history;
  long evaluations = 0;
};

/// Scores every row of `positions` (row-major, `dim` wide) in parallel.
std::vector<CandidateScore> score_batch(const ScoreFn& score, const std::vector<double>& positions,
                                        std::size_t dim);

/// Penalty fitness of a whole population against its own worst PSL.
std::vector<double> population_fitness(const std::vector<CandidateScore>& scores);

int count_feasible(const std::vector<CandidateScore>& scores);

/// Algorithm 1 on an arbitrary box.
SearchOutcome run_swarm(const SearchBox& box, const ScoreFn& score, const OptimizerBudget& budget,
                        std::uint64_t seed);

}  // namespace tomoswarm::detail

namespace tomoswarm::detail {

/// Re-evaluates a reduced-encoding best and packages it.
OptimizationResult reduced_result(Algorithm algorithm, const Evaluator& evaluator,
                                  const SearchOutcome& outcome, const OptimizerBudget& budget,
                                  std::uint64_t seed, double wall_time_s);

}  // namespace tomoswarm::detail
