#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "swarm.hpp"
#include "tomoswarm/optimizers.hpp"

namespace tomoswarm {

std::vector<double> blx_alpha_crossover(std::span<const double> a, std::span<const double> b,
                                        double alpha, std::mt19937_64& rng) {
  if (a.size() != b.size()) throw std::invalid_argument("blx crossover: size mismatch");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> child(a.size());
  for (std::size_t d = 0; d < a.size(); ++d) {
    const double lo = std::min(a[d], b[d]);
    const double hi = std::max(a[d], b[d]);
    const double spread = alpha * (hi - lo);
    child[d] = lo - spread + unit(rng) * (hi - lo + 2.0 * spread);
  }
  return child;
}

OptimizationResult run_cga(const ScenarioConfig& config, const OptimizerBudget& budget,
                           std::uint64_t seed) {
  budget.validate();
  const auto start = std::chrono::steady_clock::now();
  const Evaluator evaluator(config);
  const auto box = formation_box(evaluator.config());
  const detail::ScoreFn score = [&](std::span<const double> xz) {
    return evaluator.evaluate_flat(xz).score();
  };
  const auto& cs = budget.cga;
  const std::size_t dim = box.dim();
  const auto n = static_cast<std::size_t>(budget.population);
  const auto keep = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::lround(cs.selection_rate * static_cast<double>(n))), 1, n);
  const int generations = std::min(budget.iterations, cs.max_generations);
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<double> pop(n * dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 0; d < dim; ++d)
      pop[i * dim + d] = std::uniform_real_distribution<double>(box.lower[d], box.upper[d])(rng);
  auto scores = detail::score_batch(score, pop, dim);
  detail::SearchOutcome out;
  out.evaluations = static_cast<long>(n);

  auto fit = detail::population_fitness(scores);
  std::vector<std::size_t> order(n);
  auto rank = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fit[a] < fit[b]; });
  };
  rank();
  out.best.assign(pop.begin() + static_cast<std::ptrdiff_t>(order[0] * dim),
                  pop.begin() + static_cast<std::ptrdiff_t>((order[0] + 1) * dim));
  out.best_fitness = fit[order[0]];
  out.best_score = scores[order[0]];

  std::vector<double> next(n * dim);
  std::vector<CandidateScore> next_scores(n);
  std::vector<double> dummy_v(dim, 0.0);
  for (int gen = 1; gen <= generations; ++gen) {
    for (std::size_t s = 0; s < keep; ++s) {
      std::copy_n(pop.begin() + static_cast<std::ptrdiff_t>(order[s] * dim), dim,
                  next.begin() + static_cast<std::ptrdiff_t>(s * dim));
      next_scores[s] = scores[order[s]];
    }
    std::uniform_int_distribution<std::size_t> pick(0, keep - 1);
    for (std::size_t c = keep; c < n; ++c) {
      const std::size_t a = pick(rng);
      std::size_t b = pick(rng);
      if (keep > 1)
        while (b == a) b = pick(rng);
      std::span<double> child(next.data() + c * dim, dim);
      const double* pa = next.data() + a * dim;
      const double* pb = next.data() + b * dim;
      if (cs.crossover) {
        const auto genes = blx_alpha_crossover({pa, dim}, {pb, dim}, cs.blx_alpha, rng);
        std::copy(genes.begin(), genes.end(), child.begin());
      } else {
        std::copy_n(pa, dim, child.begin());
      }
      for (std::size_t d = 0; d < dim; ++d) {
        if (unit(rng) < cs.mutation_rate)
          child[d] += cs.mutation_sigma * (box.upper[d] - box.lower[d]) * gauss(rng);
      }
      reflect_walls(child, dummy_v, box);
    }
    const std::vector<double> children(next.begin() + static_cast<std::ptrdiff_t>(keep * dim),
                                       next.end());
    const auto child_scores = detail::score_batch(score, children, dim);
    out.evaluations += static_cast<long>(child_scores.size());
    std::copy(child_scores.begin(), child_scores.end(),
              next_scores.begin() + static_cast<std::ptrdiff_t>(keep));
    pop.swap(next);
    scores.swap(next_scores);
    fit = detail::population_fitness(scores);
    rank();
    if (fit[order[0]] < out.best_fitness) {
      out.best_fitness = fit[order[0]];
      out.best_score = scores[order[0]];
      out.best.assign(pop.begin() + static_cast<std::ptrdiff_t>(order[0] * dim),
                      pop.begin() + static_cast<std::ptrdiff_t>((order[0] + 1) * dim));
    }
    out.history.push_back({gen, out.best_fitness, magnitude_to_db(out.best_score.psl),
                           detail::count_feasible(scores)});
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return detail::reduced_result(Algorithm::cga, evaluator, out, budget, seed, elapsed.count());
}

}  // namespace tomoswarm
