#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tomoswarm/csv.hpp"
#include "tomoswarm/optimizers.hpp"
#include "tomoswarm/scenario.hpp"

namespace tomoswarm {

enum class SweepParameter { h_max, r_min };

std::string to_string(SweepParameter p);
/// Accepts "h_max" and "R_min" (also "r_min").
SweepParameter parse_sweep_parameter(const std::string& name);

/// h_max values are meters, R_min values Mb/s.
struct SweepSpec {
  SweepParameter parameter = SweepParameter::h_max;
  std::vector<double> values;
  std::vector<Algorithm> algorithms{Algorithm::proposed, Algorithm::pso, Algorithm::cga,
                                    Algorithm::genocop2};
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  /// Per-cell result directories are written below this when non-empty.
  std::filesystem::path output_dir;

  /// Throws std::invalid_argument on empty lists or non-positive values.
  void validate() const;
};

ScenarioConfig apply_sweep_value(ScenarioConfig config, SweepParameter parameter, double value);

struct SweepRow {
  double value = 0.0;
  Algorithm algorithm = Algorithm::proposed;
  std::uint64_t seed = 0;
  bool feasible = false;
  double psl_db = 0.0;
};

/// Median over seeds with infeasible runs ranked above every feasible PSL;
/// empty when the median itself falls on an infeasible run.
std::optional<double> median_psl_db(const std::vector<SweepRow>& runs);

struct SweepCell {
  double value = 0.0;
  Algorithm algorithm = Algorithm::proposed;
  std::optional<double> median_psl_db;
  int feasible_runs = 0;
  int runs = 0;
};

struct SweepOutcome {
  std::vector<SweepRow> rows;
  std::vector<SweepCell> cells;
};

/// Runs every (value, algorithm, seed) cell, in parallel across cells.
SweepOutcome run_sweep(const ScenarioConfig& base, const SweepSpec& spec,
                       const OptimizerBudget& budget);

/// Aggregates rows into per-(value, algorithm) cells in spec order.
std::vector<SweepCell> summarize_sweep(const SweepSpec& spec, const std::vector<SweepRow>& rows);

CsvTable sweep_rows_table(SweepParameter parameter, const std::vector<SweepRow>& rows);
CsvTable sweep_summary_table(SweepParameter parameter, const std::vector<SweepCell>& cells);

}  // namespace tomoswarm
