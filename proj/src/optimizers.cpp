#include "tomoswarm/optimizers.hpp"

#include <cmath>
#include <stdexcept>

namespace tomoswarm {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("optimizer budget: ") + what);
}

bool unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

void OptimizerBudget::validate() const {
  require(iterations >= 1, "iterations must be >= 1");
  require(population >= 2, "population must be >= 2");
  require(std::isfinite(pso.c1) && pso.c1 >= 0.0, "c1 must be >= 0");
  require(std::isfinite(pso.c2) && pso.c2 >= 0.0, "c2 must be >= 0");
  require(std::isfinite(pso.v_max) && pso.v_max > 0.0, "v_max must be > 0");
  require(unit_interval(pso.w_start) && unit_interval(pso.w_end) && pso.w_end <= pso.w_start,
          "inertia weights must satisfy 0 <= w_end <= w_start <= 1");
  require(cga.max_generations >= 1, "cga generations must be >= 1");
  require(cga.selection_rate > 0.0 && cga.selection_rate <= 1.0,
          "cga selection rate must be in (0, 1]");
  require(cga.blx_alpha >= 0.0, "blx alpha must be >= 0");
  require(unit_interval(cga.mutation_rate), "cga mutation rate must be in [0, 1]");
  require(cga.mutation_sigma >= 0.0, "cga mutation sigma must be >= 0");
  require(genocop.population >= 2, "genocop population must be >= 2");
  require(genocop.max_outer >= 1 && genocop.max_inner >= 1, "genocop generations must be >= 1");
  require(genocop.initial_temperature > 0.0, "initial temperature must be > 0");
  require(genocop.temperature_decay > 0.0 && genocop.temperature_decay < 1.0,
          "temperature decay must be in (0, 1)");
  require(unit_interval(genocop.uniform_rate) && unit_interval(genocop.nonuniform_rate) &&
              unit_interval(genocop.boundary_rate),
          "genocop mutation rates must be in [0, 1]");
  require(genocop.nonuniform_shape > 0.0, "non-uniform shape must be > 0");
  require(genocop.stall_generations >= 1, "stall generations must be >= 1");
  require(genocop.max_evaluations >= 0, "evaluation cap must be >= 0");
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::proposed: return "proposed";
    case Algorithm::pso: return "pso";
    case Algorithm::cga: return "cga";
    case Algorithm::genocop2: return "genocop2";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  for (auto a : {Algorithm::proposed, Algorithm::pso, Algorithm::cga, Algorithm::genocop2})
    if (name == to_string(a)) return a;
  throw std::invalid_argument("algorithm: unknown '" + name +
                              "' (expected proposed, pso, cga or genocop2)");
}

OptimizationResult run_algorithm(Algorithm algorithm, const ScenarioConfig& config,
                                 const OptimizerBudget& budget, std::uint64_t seed) {
  switch (algorithm) {
    case Algorithm::proposed: return run_proposed(config, budget, seed);
    case Algorithm::pso: return run_conventional_pso(config, budget, seed);
    case Algorithm::cga: return run_cga(config, budget, seed);
    case Algorithm::genocop2: return run_genocop2(config, budget, seed);
  }
  throw std::invalid_argument("algorithm: unknown");
}

}  // namespace tomoswarm
