#pragma once

#include <span>
#include <vector>

#include "tomoswarm/constraints.hpp"
#include "tomoswarm/geometry.hpp"
#include "tomoswarm/link_budget.hpp"
#include "tomoswarm/psf.hpp"
#include "tomoswarm/scenario.hpp"

namespace tomoswarm {

/// What the search loops need from one candidate: its linear PSL, summed
/// violations and feasibility.
struct CandidateScore {
  double psl = 1.0;
  double penalty = 0.0;
  bool feasible = false;
  double penalty_squares = 0.0;
};

/// Formation evaluated with the closed-form minimum powers.
struct FormationEvaluation {
  Formation formation;
  TomoMetrics metrics;
  PowerAllocation allocation;
  ConstraintReport report;

  CandidateScore score() const {
    return {metrics.psl, report.total(), report.feasible, report.sum_of_squares()};
  }
};

/// Formation plus explicitly encoded powers (full-dimension encoding). The
/// power penalties g8, g9, g10 replace g11 and g12.
struct FullEncodingEvaluation {
  Formation formation;
  std::vector<double> powers;
  TomoMetrics metrics;
  ConstraintReport sensing;
  PowerConstraintViolations power;

  double penalty() const { return sensing.total() + power.g8 + power.g9 + power.g10; }
  bool feasible() const { return sensing.feasible && power.feasible(); }
  CandidateScore score() const {
    return {metrics.psl, penalty(), feasible(),
            sensing.sum_of_squares() + power.g8 * power.g8 + power.g9 * power.g9 +
                power.g10 * power.g10};
  }
};

/// Evaluates candidates against one scenario. Thread-safe for concurrent
/// const calls.
class Evaluator {
 public:
  explicit Evaluator(ScenarioConfig config);

  const ScenarioConfig& config() const { return config_; }
  const MissionTimeline& timeline() const { return timeline_; }

  FormationEvaluation evaluate(const Formation& formation, bool with_slant_curve = false) const;
  /// Flat (x1, z1, ...) formation.
  FormationEvaluation evaluate_flat(std::span<const double> xz,
                                    bool with_slant_curve = false) const;
  /// 2I formation coordinates followed by I*K powers, UAV-major.
  FullEncodingEvaluation evaluate_full(std::span<const double> encoded) const;

 private:
  ScenarioConfig config_;
  MissionTimeline timeline_;
};

}  // namespace tomoswarm
