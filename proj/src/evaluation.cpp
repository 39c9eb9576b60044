#include "tomoswarm/evaluation.hpp"

#include <stdexcept>
#include <utility>

namespace tomoswarm {

Evaluator::Evaluator(ScenarioConfig config)
    : config_(std::move(config)), timeline_(MissionTimeline::from_config(config_)) {
  broadcast_per_uav(config_);
  validate(config_);
}

FormationEvaluation Evaluator::evaluate(const Formation& f, bool with_slant_curve) const {
  const auto axes = LocalAxes::from_formation(f, config_.target_x);
  auto metrics = tomo_metrics(f, axes, config_, with_slant_curve);
  auto allocation = allocate_min_power(f, timeline_, config_);
  auto report = evaluate_constraints(f, metrics, allocation, config_);
  return {f, std::move(metrics), std::move(allocation), report};
}

FormationEvaluation Evaluator::evaluate_flat(std::span<const double> xz,
                                             bool with_slant_curve) const {
  return evaluate(Formation::from_flat(xz), with_slant_curve);
}

FullEncodingEvaluation Evaluator::evaluate_full(std::span<const double> encoded) const {
  const std::size_t n = static_cast<std::size_t>(config_.num_uavs);
  const std::size_t k = timeline_.y.size();
  if (encoded.size() != n * (k + 2))
    throw std::invalid_argument("evaluate_full: expected (K+2)*I coordinates");
  auto f = Formation::from_flat(encoded.first(2 * n));
  std::vector<double> powers(encoded.begin() + static_cast<std::ptrdiff_t>(2 * n), encoded.end());
  const auto axes = LocalAxes::from_formation(f, config_.target_x);
  auto metrics = tomo_metrics(f, axes, config_, false);
  const auto sensing = evaluate_sensing_constraints(f, metrics, config_);
  const auto power = evaluate_power_constraints(f, timeline_, config_, powers);
  return {std::move(f), std::move(powers), std::move(metrics), sensing, power};
}

}  // namespace tomoswarm
