#include "tomoswarm/pso.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swarm.hpp"
#include "tomoswarm/parallel.hpp"

namespace tomoswarm {

bool SearchBox::contains(std::span<const double> p) const {
  if (p.size() != dim()) return false;
  for (std::size_t d = 0; d < p.size(); ++d)
    if (!(p[d] >= lower[d] && p[d] <= upper[d])) return false;
  return true;
}

SearchBox formation_box(const ScenarioConfig& c) {
  double x_lo = INFINITY;
  double x_hi = -INFINITY;
  for (double z : {c.z_min(), c.z_max()})
    for (double theta : {c.theta_min(), c.theta_max()}) {
      const double x = c.target_x - z * std::tan(theta);
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
    }
  SearchBox box;
  for (int i = 0; i < c.num_uavs; ++i) {
    box.lower.insert(box.lower.end(), {x_lo, c.z_min()});
    box.upper.insert(box.upper.end(), {x_hi, c.z_max()});
  }
  return box;
}

SearchBox full_encoding_box(const ScenarioConfig& c) {
  SearchBox box = formation_box(c);
  const auto powers = static_cast<std::size_t>(c.num_uavs) * static_cast<std::size_t>(c.num_slots);
  box.lower.insert(box.lower.end(), powers, 0.0);
  box.upper.insert(box.upper.end(), powers, c.comm.p_max.linear);
  return box;
}

void pso_position_update(std::span<double> p, std::span<const double> v) {
  if (p.size() != v.size()) throw std::invalid_argument("pso_position_update: size mismatch");
  for (std::size_t d = 0; d < p.size(); ++d) p[d] += v[d];
}

void pso_velocity_update(std::span<double> v, std::span<const double> p,
                         std::span<const double> p_best, std::span<const double> g_best, double w,
                         double c1, double c2, double v_max, Rng& rng) {
  if (p.size() != v.size() || p_best.size() != v.size() || g_best.size() != v.size())
    throw std::invalid_argument("pso_velocity_update: size mismatch");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t d = 0; d < v.size(); ++d) {
    const double r1 = unit(rng);
    const double r2 = unit(rng);
    const double next = w * v[d] + c1 * r1 * (p_best[d] - p[d]) + c2 * r2 * (g_best[d] - p[d]);
    v[d] = std::clamp(next, -v_max, v_max);
  }
}

void reflect_walls(std::span<double> p, std::span<double> v, const SearchBox& box) {
  if (p.size() != box.dim() || v.size() != box.dim())
    throw std::invalid_argument("reflect_walls: size mismatch");
  for (std::size_t d = 0; d < p.size(); ++d) {
    const double lo = box.lower[d];
    const double hi = box.upper[d];
    if (!(hi > lo)) {
      p[d] = lo;
      v[d] = -v[d];
      continue;
    }
    // Far excursions are folded with the mirror period first so the loop
    // below needs at most two reflections.
    const double width = hi - lo;
    if (p[d] < lo - 2.0 * width || p[d] > hi + 2.0 * width) {
      const double period = 2.0 * width;
      const double t = std::fmod(p[d] - lo, period);
      const double folded = t < 0.0 ? t + period : t;
      const long flips = std::lround(std::floor((p[d] - lo) / width));
      p[d] = lo + (folded <= width ? folded : period - folded);
      if (flips % 2 != 0) v[d] = -v[d];
      continue;
    }
    while (p[d] < lo || p[d] > hi) {
      p[d] = p[d] < lo ? 2.0 * lo - p[d] : 2.0 * hi - p[d];
      v[d] = -v[d];
    }
  }
}

double inertia_weight(int iteration, int iterations, double w_start, double w_end) {
  if (iterations <= 1) return w_start;
  const double t = static_cast<double>(iteration - 1) / static_cast<double>(iterations - 1);
  return w_start + (w_end - w_start) * std::clamp(t, 0.0, 1.0);
}

namespace detail {

std::vector<CandidateScore> score_batch(const ScoreFn& score, const std::vector<double>& positions,
                                        std::size_t dim) {
  const std::size_t n = positions.size() / dim;
  std::vector<CandidateScore> out(n);
  parallel_for(n, [&](std::size_t i) {
    out[i] = score(std::span<const double>(positions).subspan(i * dim, dim));
  });
  return out;
}

std::vector<double> population_fitness(const std::vector<CandidateScore>& scores) {
  double psl_max = 0.0;
  for (const auto& s : scores) psl_max = std::max(psl_max, s.psl);
  std::vector<double> f(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i)
    f[i] = penalized_fitness(scores[i].feasible, scores[i].penalty, scores[i].psl, psl_max).value;
  return f;
}

int count_feasible(const std::vector<CandidateScore>& scores) {
  return static_cast<int>(
      std::count_if(scores.begin(), scores.end(), [](const auto& s) { return s.feasible; }));
}

SearchOutcome run_swarm(const SearchBox& box, const ScoreFn& score, const OptimizerBudget& budget,
                        std::uint64_t seed) {
  budget.validate();
  const std::size_t dim = box.dim();
  const auto n = static_cast<std::size_t>(budget.population);
  const auto& ps = budget.pso;
  Rng rng(seed);

  std::vector<double> pos(n * dim);
  std::vector<double> vel(n * dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 0; d < dim; ++d)
      pos[i * dim + d] = std::uniform_real_distribution<double>(box.lower[d], box.upper[d])(rng);
  std::uniform_real_distribution<double> v0(0.0, ps.v_max);
  for (auto& v : vel) v = v0(rng);

  SearchOutcome out;
  auto scores = score_batch(score, pos, dim);
  out.evaluations += static_cast<long>(n);
  auto fit = population_fitness(scores);

  std::vector<double> pbest = pos;
  std::vector<double> pbest_fit = fit;
  std::vector<CandidateScore> pbest_score = scores;
  std::size_t g = static_cast<std::size_t>(
      std::min_element(pbest_fit.begin(), pbest_fit.end()) - pbest_fit.begin());
  std::vector<double> gbest(pbest.begin() + static_cast<std::ptrdiff_t>(g * dim),
                            pbest.begin() + static_cast<std::ptrdiff_t>((g + 1) * dim));
  double gbest_fit = pbest_fit[g];
  CandidateScore gbest_score = pbest_score[g];

  out.history.reserve(static_cast<std::size_t>(budget.iterations));
  for (int m = 1; m <= budget.iterations; ++m) {
    const double w = inertia_weight(m, budget.iterations, ps.w_start, ps.w_end);
    for (std::size_t i = 0; i < n; ++i) {
      std::span<double> p(pos.data() + i * dim, dim);
      std::span<double> v(vel.data() + i * dim, dim);
      pso_velocity_update(v, p, std::span<const double>(pbest.data() + i * dim, dim), gbest, w,
                          ps.c1, ps.c2, ps.v_max, rng);
      pso_position_update(p, v);
      reflect_walls(p, v, box);
    }
    scores = score_batch(score, pos, dim);
    out.evaluations += static_cast<long>(n);
    fit = population_fitness(scores);
    for (std::size_t i = 0; i < n; ++i) {
      if (fit[i] < pbest_fit[i]) {
        pbest_fit[i] = fit[i];
        pbest_score[i] = scores[i];
        std::copy_n(pos.begin() + static_cast<std::ptrdiff_t>(i * dim), dim,
                    pbest.begin() + static_cast<std::ptrdiff_t>(i * dim));
      }
      if (pbest_fit[i] < gbest_fit) {
        gbest_fit = pbest_fit[i];
        gbest_score = pbest_score[i];
        std::copy_n(pbest.begin() + static_cast<std::ptrdiff_t>(i * dim), dim, gbest.begin());
      }
    }
    out.history.push_back(
        {m, gbest_fit, magnitude_to_db(gbest_score.psl), count_feasible(scores)});
  }
  out.best = std::move(gbest);
  out.best_score = gbest_score;
  out.best_fitness = gbest_fit;
  return out;
}

}  // namespace detail

}  // namespace tomoswarm
