#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "swarm.hpp"
#include "tomoswarm/optimizers.hpp"

namespace tomoswarm {

namespace {

// Feasible candidates rank by PSL, infeasible ones above every PSF value.
double ranking_value(const CandidateScore& s) {
  return penalized_fitness(s.feasible, s.penalty, s.psl, 1.0).value;
}

}  // namespace

double annealed_objective(double psl, double penalty_squares, double tau) {
  return psl + penalty_squares / (2.0 * tau);
}

OptimizationResult run_genocop2(const ScenarioConfig& config, const OptimizerBudget& budget,
                                std::uint64_t seed) {
  budget.validate();
  const auto start = std::chrono::steady_clock::now();
  const Evaluator evaluator(config);
  const auto box = formation_box(evaluator.config());
  const detail::ScoreFn score = [&](std::span<const double> xz) {
    return evaluator.evaluate_flat(xz).score();
  };
  const auto& gs = budget.genocop;
  const std::size_t dim = box.dim();
  const auto n = static_cast<std::size_t>(gs.population);
  const int stages = std::min(budget.iterations, gs.max_outer);
  const long cap = gs.max_evaluations > 0
                       ? gs.max_evaluations
                       : static_cast<long>(budget.iterations) * budget.population;
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> gene(0, dim - 1);
  std::uniform_int_distribution<std::size_t> member(0, n - 1);

  std::vector<double> pop(n * dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 0; d < dim; ++d)
      pop[i * dim + d] = std::uniform_real_distribution<double>(box.lower[d], box.upper[d])(rng);
  auto scores = detail::score_batch(score, pop, dim);
  detail::SearchOutcome out;
  out.evaluations = static_cast<long>(n);

  auto consider = [&](const std::vector<double>& rows, const std::vector<CandidateScore>& sc) {
    for (std::size_t i = 0; i < sc.size(); ++i) {
      const double v = ranking_value(sc[i]);
      if (out.best.empty() || v < out.best_fitness) {
        out.best_fitness = v;
        out.best_score = sc[i];
        out.best.assign(rows.begin() + static_cast<std::ptrdiff_t>(i * dim),
                        rows.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim));
      }
    }
  };
  consider(pop, scores);

  double tau = gs.initial_temperature;
  std::vector<double> children(n * dim);
  std::vector<double> dummy_v(dim, 0.0);
  for (int stage = 1; stage <= stages && out.evaluations < cap; ++stage) {
    auto objective = [tau](const CandidateScore& s) {
      return annealed_objective(s.psl, s.penalty_squares, tau);
    };
    std::vector<double> obj(n);
    for (std::size_t i = 0; i < n; ++i) obj[i] = objective(scores[i]);
    double stage_best = *std::min_element(obj.begin(), obj.end());
    int stall = 0;

    for (int t = 1; t <= gs.max_inner && stall < gs.stall_generations && out.evaluations < cap;
         ++t) {
      const double progress = static_cast<double>(t) / static_cast<double>(gs.max_inner);
      auto tournament = [&] {
        const std::size_t a = member(rng);
        const std::size_t b = member(rng);
        return obj[b] < obj[a] ? b : a;
      };
      for (std::size_t c = 0; c < n; ++c) {
        const double* p1 = pop.data() + tournament() * dim;
        const double* p2 = pop.data() + tournament() * dim;
        std::span<double> child(children.data() + c * dim, dim);
        const double a = unit(rng);
        for (std::size_t d = 0; d < dim; ++d) child[d] = a * p1[d] + (1.0 - a) * p2[d];
        if (unit(rng) < gs.uniform_rate) {
          const std::size_t d = gene(rng);
          child[d] = box.lower[d] + unit(rng) * (box.upper[d] - box.lower[d]);
        }
        if (unit(rng) < gs.nonuniform_rate) {
          const std::size_t d = gene(rng);
          const double shrink =
              1.0 - std::pow(unit(rng), std::pow(1.0 - progress, gs.nonuniform_shape));
          if (unit(rng) < 0.5)
            child[d] += (box.upper[d] - child[d]) * shrink;
          else
            child[d] -= (child[d] - box.lower[d]) * shrink;
        }
        if (unit(rng) < gs.boundary_rate) {
          const std::size_t d = gene(rng);
          child[d] = unit(rng) < 0.5 ? box.lower[d] : box.upper[d];
        }
        reflect_walls(child, dummy_v, box);
      }
      const auto child_scores = detail::score_batch(score, children, dim);
      out.evaluations += static_cast<long>(n);
      consider(children, child_scores);

      // (mu + lambda) replacement on the annealed objective.
      std::vector<std::size_t> order(2 * n);
      std::iota(order.begin(), order.end(), 0);
      auto obj_of = [&](std::size_t k) {
        return k < n ? obj[k] : objective(child_scores[k - n]);
      };
      std::vector<double> merged_obj(2 * n);
      for (std::size_t k = 0; k < 2 * n; ++k) merged_obj[k] = obj_of(k);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return merged_obj[a] < merged_obj[b];
      });
      std::vector<double> next(n * dim);
      std::vector<CandidateScore> next_scores(n);
      std::vector<double> next_obj(n);
      for (std::size_t s = 0; s < n; ++s) {
        const std::size_t k = order[s];
        const double* src = k < n ? pop.data() + k * dim : children.data() + (k - n) * dim;
        std::copy_n(src, dim, next.begin() + static_cast<std::ptrdiff_t>(s * dim));
        next_scores[s] = k < n ? scores[k] : child_scores[k - n];
        next_obj[s] = merged_obj[k];
      }
      pop.swap(next);
      scores.swap(next_scores);
      obj.swap(next_obj);
      if (obj[0] < stage_best) {
        stage_best = obj[0];
        stall = 0;
      } else {
        ++stall;
      }
    }
    out.history.push_back({stage, out.best_fitness, magnitude_to_db(out.best_score.psl),
                           detail::count_feasible(scores)});
    tau *= gs.temperature_decay;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return detail::reduced_result(Algorithm::genocop2, evaluator, out, budget, seed,
                                elapsed.count());
}

}  // namespace tomoswarm
