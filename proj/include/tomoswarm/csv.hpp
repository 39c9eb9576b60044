#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "tomoswarm/constraints.hpp"
#include "tomoswarm/geometry.hpp"
#include "tomoswarm/link_budget.hpp"
#include "tomoswarm/optimizers.hpp"
#include "tomoswarm/psf.hpp"

namespace tomoswarm {

/// A level in dB: written with 4 decimals, full precision in the raw sidecar.
struct DecibelCell {
  double value = 0.0;
};

using CsvCell = std::variant<std::string, double, long, DecibelCell>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;
};

/// Token written in place of a PSL for infeasible results.
inline constexpr const char* kInfeasibleToken = "INFEASIBLE";

/// Shortest round-trip decimal form.
std::string format_number(double v);

/// Writes `path`; when the table has dB cells also writes `<stem>_raw.csv`
/// next to it with full-precision values. Throws std::system_error on I/O
/// failure.
void write_csv(const std::filesystem::path& path, const CsvTable& table);

/// Header row plus string cells.
struct ParsedCsv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;
};

/// Throws ParseError on ragged rows, std::system_error if unreadable.
ParsedCsv read_csv(const std::filesystem::path& path);

CsvTable psf_table(const PsfCurve& curve);
CsvTable metrics_table(const TomoMetrics& metrics);
CsvTable constraint_table(const ConstraintReport& report);
CsvTable allocation_table(const PowerAllocation& allocation);
CsvTable power_table(const std::vector<double>& powers, int num_slots);
CsvTable snr_table(const RadarSnrTable& snr);
CsvTable formation_table(const Formation& formation);
CsvTable history_table(const std::vector<HistoryRow>& history);
/// key,value summary with the budget and hyperparameters echoed.
CsvTable result_table(const OptimizationResult& result);

/// Reads a uav,x,z (or x,z) formation file.
Formation read_formation_csv(const std::filesystem::path& path);

/// Writes result.csv, formation.csv, powers.csv and history.csv into `dir`.
void write_result(const std::filesystem::path& dir, const OptimizationResult& result);

}  // namespace tomoswarm
