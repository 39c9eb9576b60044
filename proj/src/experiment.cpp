#include "tomoswarm/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tomoswarm/parallel.hpp"

namespace tomoswarm {

std::string to_string(SweepParameter p) { return p == SweepParameter::h_max ? "h_max" : "R_min"; }

SweepParameter parse_sweep_parameter(const std::string& name) {
  if (name == "h_max") return SweepParameter::h_max;
  if (name == "R_min" || name == "r_min") return SweepParameter::r_min;
  throw std::invalid_argument("sweep-param: expected h_max or R_min, got '" + name + "'");
}

void SweepSpec::validate() const {
  if (values.empty()) throw std::invalid_argument("sweep-values: list is empty");
  if (algorithms.empty()) throw std::invalid_argument("sweep algorithms: list is empty");
  if (seeds.empty()) throw std::invalid_argument("sweep seeds: list is empty");
  for (double v : values)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("sweep-values: values must be positive");
}

ScenarioConfig apply_sweep_value(ScenarioConfig config, SweepParameter parameter, double value) {
  if (parameter == SweepParameter::h_max)
    config.h_max = value;
  else
    config.comm.r_min = value * 1e6;
  return config;
}

std::optional<double> median_psl_db(const std::vector<SweepRow>& runs) {
  if (runs.empty()) return std::nullopt;
  std::vector<double> v;
  for (const auto& r : runs)
    v.push_back(r.feasible ? r.psl_db : std::numeric_limits<double>::infinity());
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  const double m = n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
  if (!std::isfinite(m)) return std::nullopt;
  return m;
}

std::vector<SweepCell> summarize_sweep(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  std::vector<SweepCell> cells;
  for (double value : spec.values)
    for (auto alg : spec.algorithms) {
      std::vector<SweepRow> runs;
      for (const auto& r : rows)
        if (r.value == value && r.algorithm == alg) runs.push_back(r);
      SweepCell c;
      c.value = value;
      c.algorithm = alg;
      c.median_psl_db = median_psl_db(runs);
      c.runs = static_cast<int>(runs.size());
      c.feasible_runs = static_cast<int>(
          std::count_if(runs.begin(), runs.end(), [](const auto& r) { return r.feasible; }));
      cells.push_back(c);
    }
  return cells;
}

SweepOutcome run_sweep(const ScenarioConfig& base, const SweepSpec& spec,
                       const OptimizerBudget& budget) {
  spec.validate();
  budget.validate();
  struct Job {
    double value;
    Algorithm algorithm;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (double v : spec.values)
    for (auto a : spec.algorithms)
      for (auto s : spec.seeds) jobs.push_back({v, a, s});

  SweepOutcome out;
  out.rows.resize(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const auto& job = jobs[i];
    const auto config = apply_sweep_value(base, spec.parameter, job.value);
    const auto result = run_algorithm(job.algorithm, config, budget, job.seed);
    out.rows[i] = {job.value, job.algorithm, job.seed, result.feasible, result.best_psl_db};
    if (!spec.output_dir.empty()) {
      const auto dir = spec.output_dir / "cells" /
                       (to_string(spec.parameter) + "_" + format_number(job.value)) /
                       to_string(job.algorithm) / ("seed_" + std::to_string(job.seed));
      write_result(dir, result);
    }
  });
  out.cells = summarize_sweep(spec, out.rows);
  return out;
}

CsvTable sweep_rows_table(SweepParameter parameter, const std::vector<SweepRow>& rows) {
  CsvTable t{{to_string(parameter), "algorithm", "seed", "feasible", "PSL_dB",
              "PSL_dB_unconstrained"},
             {}};
  for (const auto& r : rows) {
    CsvCell psl = r.feasible ? CsvCell(DecibelCell{r.psl_db}) : CsvCell(std::string(kInfeasibleToken));
    t.rows.push_back({r.value, to_string(r.algorithm), std::to_string(r.seed),
                      std::string(r.feasible ? "true" : "false"), psl, DecibelCell{r.psl_db}});
  }
  return t;
}

CsvTable sweep_summary_table(SweepParameter parameter, const std::vector<SweepCell>& cells) {
  CsvTable t{{to_string(parameter), "algorithm", "median_PSL_dB", "feasible_runs", "runs"}, {}};
  for (const auto& c : cells) {
    CsvCell m = c.median_psl_db ? CsvCell(DecibelCell{*c.median_psl_db})
                                : CsvCell(std::string(kInfeasibleToken));
    t.rows.push_back({c.value, to_string(c.algorithm), m, static_cast<long>(c.feasible_runs),
                      static_cast<long>(c.runs)});
  }
  return t;
}

}  // namespace tomoswarm
