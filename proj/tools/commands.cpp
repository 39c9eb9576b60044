#include "commands.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <system_error>

#include "tomoswarm/csv.hpp"
#include "tomoswarm/evaluation.hpp"
#include "tomoswarm/experiment.hpp"
#include "tomoswarm/optimizers.hpp"
#include "tomoswarm/scenario.hpp"

namespace tomoswarm::cli {

namespace {

ScenarioConfig load(const CommonOptions& common) {
  ScenarioConfig c = common.config_path.empty() ? default_config()
                                                : load_config(common.config_path);
  broadcast_per_uav(c);
  validate(c);
  return c;
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::system_error(ec, "cannot create " + dir.string());
}

OptimizerBudget make_budget(const BudgetOverrides& o) {
  OptimizerBudget b;
  if (o.iterations) b.iterations = *o.iterations;
  if (o.population) b.population = *o.population;
  if (o.c1) b.pso.c1 = *o.c1;
  if (o.c2) b.pso.c2 = *o.c2;
  if (o.v_max) b.pso.v_max = *o.v_max;
  b.validate();
  return b;
}

void add_budget_flags(CLI::App* app, BudgetOverrides& b) {
  app->add_option("--iterations", b.iterations, "Iterations / generations M");
  app->add_option("--population", b.population, "Population size O");
  app->add_option("--c1", b.c1, "Cognitive learning factor");
  app->add_option("--c2", b.c2, "Social learning factor");
  app->add_option("--vmax", b.v_max, "Velocity bound");
}

}  // namespace

int cmd_evaluate(const CommonOptions& common, const EvaluateOptions& o, std::ostream& log) {
  const auto config = load(common);
  if (o.ula_spacing.has_value() == !o.formation_file.empty())
    throw std::invalid_argument("evaluate: give exactly one of --ula or --formation");
  Formation formation = [&] {
    if (!o.formation_file.empty()) return read_formation_csv(o.formation_file);
    UlaOrientation orientation;
    if (o.ula_orientation == "perpendicular")
      orientation = UlaOrientation::perpendicular_to_los;
    else if (o.ula_orientation == "vertical")
      orientation = UlaOrientation::vertical;
    else if (o.ula_orientation == "along-los")
      orientation = UlaOrientation::along_los;
    else
      throw std::invalid_argument(
          "ula-orientation: expected perpendicular, vertical or along-los");
    return ula_formation(config, *o.ula_spacing, orientation);
  }();
  if (static_cast<int>(formation.size()) != config.num_uavs)
    throw std::invalid_argument("num_uavs: formation has " + std::to_string(formation.size()) +
                                " UAVs, config expects " + std::to_string(config.num_uavs));

  const Evaluator evaluator(config);
  const auto ev = evaluator.evaluate(formation, true);
  const auto axes = LocalAxes::from_formation(formation, config.target_x);
  const auto psf_n = evaluate_psf(formation, axes, config, PsfAxis::n, config.h_max);
  const auto psf_r = evaluate_psf(formation, axes, config, PsfAxis::r, config.h_max);
  const auto area = resolution_cell_area(ev.metrics, config);

  ensure_dir(common.out_dir);
  write_csv(common.out_dir / "formation.csv", formation_table(formation));
  write_csv(common.out_dir / "psf_n.csv", psf_table(psf_n));
  write_csv(common.out_dir / "psf_r.csv", psf_table(psf_r));
  write_csv(common.out_dir / "metrics.csv", metrics_table(ev.metrics));
  write_csv(common.out_dir / "constraints.csv", constraint_table(ev.report));
  write_csv(common.out_dir / "allocation.csv", allocation_table(ev.allocation));
  write_csv(common.out_dir / "snr.csv",
            snr_table(radar_snr_table(formation, config, radar_alpha(config, area))));
  log << "PSL " << format_number(ev.metrics.psl_db) << " dB, feasible "
      << (ev.report.feasible ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_optimize(const CommonOptions& common, const OptimizeOptions& o, std::ostream& log) {
  const auto config = load(common);
  const auto algorithm = parse_algorithm(o.algorithm);
  const auto budget = make_budget(o.budget);
  const auto result = run_algorithm(algorithm, config, budget, o.seed);
  write_result(common.out_dir, result);
  log << to_string(algorithm) << " seed " << o.seed << ": PSL "
      << (result.feasible ? format_number(result.best_psl_db) + " dB" : kInfeasibleToken)
      << ", " << result.evaluations << " evaluations, " << format_number(result.wall_time_s)
      << " s\n";
  return kExitOk;
}

int cmd_sweep(const CommonOptions& common, const SweepOptions& o, std::ostream& log) {
  const auto config = load(common);
  SweepSpec spec;
  spec.parameter = parse_sweep_parameter(o.parameter);
  spec.values = o.values;
  spec.algorithms.clear();
  for (const auto& a : o.algorithms) spec.algorithms.push_back(parse_algorithm(a));
  spec.seeds = o.seeds;
  spec.output_dir = common.out_dir;
  spec.validate();
  const auto budget = make_budget(o.budget);
  ensure_dir(common.out_dir);
  const auto outcome = run_sweep(config, spec, budget);
  write_csv(common.out_dir / "sweep.csv", sweep_rows_table(spec.parameter, outcome.rows));
  write_csv(common.out_dir / "summary.csv", sweep_summary_table(spec.parameter, outcome.cells));
  for (const auto& c : outcome.cells)
    log << to_string(spec.parameter) << '=' << format_number(c.value) << ' '
        << to_string(c.algorithm) << ": median "
        << (c.median_psl_db ? format_number(*c.median_psl_db) + " dB" : kInfeasibleToken) << " ("
        << c.feasible_runs << '/' << c.runs << " feasible)\n";
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"UAV-swarm MIMO TomoSAR formation design"};
  app.require_subcommand(1);
  CommonOptions common;
  std::string out = ".";
  app.add_option("--config", common.config_path, "Scenario file (defaults if omitted)");
  app.add_option("--out", out, "Output directory");

  EvaluateOptions eval;
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate one formation");
  evaluate->add_option("--ula", eval.ula_spacing, "Uniform linear array with this spacing (m)");
  evaluate->add_option("--formation", eval.formation_file, "Formation CSV with x,z columns");
  evaluate->add_option("--ula-orientation", eval.ula_orientation, "perpendicular, vertical or along-los");

  OptimizeOptions opt;
  auto* optimize = app.add_subcommand("optimize", "Run one optimizer");
  optimize->add_option("--algorithm", opt.algorithm, "proposed, pso, cga or genocop2");
  optimize->add_option("--seed", opt.seed, "RNG seed");
  add_budget_flags(optimize, opt.budget);

  SweepOptions sw;
  auto* sweep = app.add_subcommand("sweep", "Sweep h_max (m) or R_min (Mb/s)");
  sweep->add_option("--sweep-param", sw.parameter, "h_max or R_min")->required();
  sweep->add_option("--sweep-values", sw.values, "Comma-separated values")
      ->delimiter(',')
      ->expected(0, -1);
  sweep->add_option("--algorithms", sw.algorithms, "Algorithms to run")->delimiter(',');
  sweep->add_option("--seeds", sw.seeds, "Seeds")->delimiter(',');
  add_budget_flags(sweep, sw.budget);

  for (auto* sub : {evaluate, optimize, sweep}) {
    sub->add_option("--config", common.config_path, "Scenario file");
    sub->add_option("--out", out, "Output directory");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  common.out_dir = out;

  try {
    if (*evaluate) return cmd_evaluate(common, eval, std::cout);
    if (*optimize) return cmd_optimize(common, opt, std::cout);
    return cmd_sweep(common, sw, std::cout);
  } catch (const std::system_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace tomoswarm::cli
