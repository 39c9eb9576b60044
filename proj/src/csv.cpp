#include "tomoswarm/csv.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace tomoswarm {

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace {

std::string render(const CsvCell& cell, bool raw) {
  return std::visit(
      [raw](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, double>) {
          return format_number(v);
        } else if constexpr (std::is_same_v<T, long>) {
          return std::to_string(v);
        } else {
          if (raw) return format_number(v.value);
          char buf[64];
          std::snprintf(buf, sizeof buf, "%.4f", v.value);
          return buf;
        }
      },
      cell);
}

void emit(const std::filesystem::path& path, const CsvTable& t, bool raw) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + path.string());
  for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << t.header[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << render(row[i], raw);
    out << '\n';
  }
  out.flush();
  if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + path.string());
}

bool has_decibels(const CsvTable& t) {
  for (const auto& row : t.rows)
    for (const auto& c : row)
      if (std::holds_alternative<DecibelCell>(c)) return true;
  return false;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double to_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(what + ": not a number '" + s + "'");
  return v;
}

}  // namespace

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  emit(path, table, false);
  if (has_decibels(table)) {
    auto raw = path;
    raw.replace_filename(path.stem().string() + "_raw" + path.extension().string());
    emit(raw, table, true);
  }
}

std::size_t ParsedCsv::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw ParseError("csv: missing column '" + name + "'");
}

ParsedCsv read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::system_error(errno, std::generic_category(), "cannot read " + path.string());
  ParsedCsv csv;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line);
    if (first) {
      csv.header = std::move(cells);
      first = false;
      continue;
    }
    if (cells.size() != csv.header.size())
      throw ParseError("csv: ragged row in " + path.string());
    csv.rows.push_back(std::move(cells));
  }
  if (first) throw ParseError("csv: empty file " + path.string());
  return csv;
}

CsvTable psf_table(const PsfCurve& curve) {
  CsvTable t{{"s_meters", "psf_linear", "psf_dB"}, {}};
  for (std::size_t i = 0; i < curve.values.size(); ++i)
    t.rows.push_back({curve.position(i), curve.values[i],
                      DecibelCell{magnitude_to_db(curve.values[i])}});
  return t;
}

CsvTable metrics_table(const TomoMetrics& m) {
  auto opt = [](const std::optional<double>& v) -> CsvCell {
    if (v) return *v;
    return std::string("NOT_FOUND");
  };
  CsvTable t{{"metric", "value"}, {}};
  t.rows.push_back({std::string("delta_n_m"), opt(m.delta_n)});
  t.rows.push_back({std::string("delta_r_m"), opt(m.delta_r)});
  t.rows.push_back({std::string("delta_r_psf_m"), opt(m.delta_r_psf)});
  t.rows.push_back({std::string("psl_linear"), m.psl});
  t.rows.push_back({std::string("psl_dB"), DecibelCell{m.psl_db}});
  t.rows.push_back({std::string("mainlobe_peak"), m.mainlobe_peak});
  t.rows.push_back({std::string("grid_step_m"), m.grid_step});
  return t;
}

CsvTable constraint_table(const ConstraintReport& r) {
  CsvTable t{{"term", "value", "unit"}, {}};
  for (const auto& [name, term] : r.detail()) t.rows.push_back({name, term.value, term.unit});
  t.rows.push_back({std::string("total"), r.total(), std::string("mixed")});
  t.rows.push_back({std::string("feasible"), std::string(r.feasible ? "true" : "false"),
                    std::string("")});
  return t;
}

CsvTable allocation_table(const PowerAllocation& a) {
  return power_table(a.eta, a.num_slots);
}

CsvTable power_table(const std::vector<double>& powers, int num_slots) {
  CsvTable t{{"uav", "slot", "eta_watts"}, {}};
  const auto k = static_cast<std::size_t>(num_slots);
  for (std::size_t idx = 0; idx < powers.size(); ++idx)
    t.rows.push_back({static_cast<long>(idx / k), static_cast<long>(idx % k), powers[idx]});
  return t;
}

CsvTable snr_table(const RadarSnrTable& s) {
  CsvTable t{{"i", "j", "snr_linear", "snr_dB"}, {}};
  for (int i = 0; i < s.size; ++i)
    for (int j = 0; j < s.size; ++j)
      t.rows.push_back({static_cast<long>(i), static_cast<long>(j), s.at(i, j),
                        DecibelCell{10.0 * std::log10(s.at(i, j))}});
  return t;
}

CsvTable formation_table(const Formation& f) {
  CsvTable t{{"uav", "x", "z"}, {}};
  for (std::size_t i = 0; i < f.size(); ++i)
    t.rows.push_back({static_cast<long>(i), f[i].x, f[i].z});
  return t;
}

CsvTable history_table(const std::vector<HistoryRow>& h) {
  CsvTable t{{"iteration", "best_fitness", "best_PSL_dB", "feasible_count"}, {}};
  for (const auto& row : h)
    t.rows.push_back({static_cast<long>(row.iteration), row.best_fitness,
                      DecibelCell{row.best_psl_db}, static_cast<long>(row.feasible_count)});
  return t;
}

CsvTable result_table(const OptimizationResult& r) {
  const auto& b = r.budget;
  CsvTable t{{"key", "value"}, {}};
  auto add = [&](const char* key, CsvCell v) { t.rows.push_back({std::string(key), std::move(v)}); };
  add("algorithm", to_string(r.algorithm));
  add("seed", std::to_string(r.seed));
  add("iterations", static_cast<long>(b.iterations));
  add("population", static_cast<long>(b.population));
  if (r.algorithm == Algorithm::proposed || r.algorithm == Algorithm::pso) {
    add("c1", b.pso.c1);
    add("c2", b.pso.c2);
    add("v_max", b.pso.v_max);
    add("w_start", b.pso.w_start);
    add("w_end", b.pso.w_end);
  } else if (r.algorithm == Algorithm::cga) {
    add("generations", static_cast<long>(std::min(b.iterations, b.cga.max_generations)));
    add("selection_rate", b.cga.selection_rate);
    add("blx_alpha", b.cga.blx_alpha);
    add("mutation_rate", b.cga.mutation_rate);
    add("mutation_sigma", b.cga.mutation_sigma);
  } else {
    add("genocop_population", static_cast<long>(b.genocop.population));
    add("initial_temperature", b.genocop.initial_temperature);
    add("temperature_decay", b.genocop.temperature_decay);
    add("uniform_rate", b.genocop.uniform_rate);
    add("nonuniform_rate", b.genocop.nonuniform_rate);
    add("boundary_rate", b.genocop.boundary_rate);
  }
  add("feasible", std::string(r.feasible ? "true" : "false"));
  if (r.feasible)
    add("best_PSL_dB", DecibelCell{r.best_psl_db});
  else
    add("best_PSL_dB", std::string(kInfeasibleToken));
  add("best_PSL_dB_unconstrained", DecibelCell{r.best_psl_db});
  add("best_PSL_linear", r.best_psl);
  add("best_fitness", r.best_fitness);
  add("penalty_total", r.report.total() + r.power_violations.g8 + r.power_violations.g9 +
                           r.power_violations.g10);
  add("evaluations", r.evaluations);
  return t;
}

Formation read_formation_csv(const std::filesystem::path& path) {
  const auto csv = read_csv(path);
  const auto xi = csv.column("x");
  const auto zi = csv.column("z");
  std::vector<Point2> pts;
  for (const auto& row : csv.rows)
    pts.push_back({to_double(row[xi], "formation x"), to_double(row[zi], "formation z")});
  return Formation(std::move(pts));
}

void write_result(const std::filesystem::path& dir, const OptimizationResult& r) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::system_error(ec, "cannot create " + dir.string());
  write_csv(dir / "result.csv", result_table(r));
  write_csv(dir / "formation.csv", formation_table(r.best_formation));
  write_csv(dir / "powers.csv", power_table(r.powers, r.num_slots));
  write_csv(dir / "history.csv", history_table(r.history));
}

}  // namespace tomoswarm
