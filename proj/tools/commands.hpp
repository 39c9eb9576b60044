#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tomoswarm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitIo = 3;

struct CommonOptions {
  /// Defaults when empty.
  std::string config_path;
  std::filesystem::path out_dir = ".";
};

struct BudgetOverrides {
  std::optional<int> iterations;
  std::optional<int> population;
  std::optional<double> c1;
  std::optional<double> c2;
  std::optional<double> v_max;
};

struct EvaluateOptions {
  std::optional<double> ula_spacing;
  std::string formation_file;
  std::string ula_orientation = "perpendicular";
};

struct OptimizeOptions {
  std::string algorithm = "proposed";
  std::uint64_t seed = 1;
  BudgetOverrides budget;
};

struct SweepOptions {
  std::string parameter;
  std::vector<double> values;
  std::vector<std::string> algorithms{"proposed", "pso", "cga", "genocop2"};
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  BudgetOverrides budget;
};

int cmd_evaluate(const CommonOptions& common, const EvaluateOptions& options, std::ostream& log);
int cmd_optimize(const CommonOptions& common, const OptimizeOptions& options, std::ostream& log);
int cmd_sweep(const CommonOptions& common, const SweepOptions& options, std::ostream& log);

/// Parses arguments, dispatches, and maps exceptions to exit codes.
int run(int argc, char** argv);

}  // namespace tomoswarm::cli
