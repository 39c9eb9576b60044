// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance_tests [--quick] [--cache FILE] [--seeds N]
//
// --quick shrinks the optimizer budgets for development runs; the criteria
// are only meaningful at the default budget.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <tuple>

#include "tomoswarm/csv.hpp"
#include "tomoswarm/evaluation.hpp"
#include "tomoswarm/experiment.hpp"
#include "tomoswarm/optimizers.hpp"
#include "tomoswarm/pso.hpp"

using namespace tomoswarm;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " | " << what << " | "
            << detail << std::endl;
  if (!pass) ++failures;
}

Formation random_formation(const ScenarioConfig& c, std::mt19937_64& rng) {
  const auto box = formation_box(c);
  std::vector<double> xz(box.dim());
  for (std::size_t d = 0; d < xz.size(); ++d)
    xz[d] = std::uniform_real_distribution<double>(box.lower[d], box.upper[d])(rng);
  return Formation::from_flat(xz);
}

// Summary of one optimizer run kept by the cache.
struct RunRecord {
  bool feasible = false;
  double psl_db = 0.0;
  double delta_n = NAN;
  double wall_s = 0.0;
  std::vector<double> formation;
};

class RunCache {
 public:
  RunCache(OptimizerBudget budget, std::filesystem::path file)
      : budget_(budget), file_(std::move(file)) {
    load();
  }

  const RunRecord& get(double h_max, double r_min_mbps, Algorithm a, std::uint64_t seed) {
    const Key key{h_max, r_min_mbps, to_string(a), seed};
    if (auto it = runs_.find(key); it != runs_.end()) return it->second;
    auto c = default_config();
    c.h_max = h_max;
    c.comm.r_min = r_min_mbps * 1e6;
    const auto r = run_algorithm(a, c, budget_, seed);
    RunRecord rec;
    rec.feasible = r.feasible;
    rec.psl_db = r.best_psl_db;
    rec.wall_s = r.wall_time_s;
    rec.formation = r.best_formation.flat();
    const auto axes = LocalAxes::from_formation(r.best_formation, c.target_x);
    const auto m = tomo_metrics(r.best_formation, axes, c, false);
    rec.delta_n = m.delta_n.value_or(INFINITY);
    std::cerr << "  run h_max=" << h_max << " R_min=" << r_min_mbps << " " << to_string(a)
              << " seed " << seed << ": " << (rec.feasible ? "feasible" : "infeasible") << " PSL "
              << fmt(rec.psl_db) << " dB (" << fmt(rec.wall_s, 1) << " s)" << std::endl;
    append(key, rec);
    return runs_.emplace(key, rec).first->second;
  }

 private:
  using Key = std::tuple<double, double, std::string, std::uint64_t>;

  std::string budget_tag() const {
    return std::to_string(budget_.iterations) + "x" + std::to_string(budget_.population);
  }

  void load() {
    if (file_.empty()) return;
    std::ifstream in(file_);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream s(line);
      std::string tag, alg;
      Key k;
      RunRecord r;
      std::size_t n = 0;
      s >> tag >> std::get<0>(k) >> std::get<1>(k) >> alg >> std::get<3>(k) >> r.feasible >>
          r.psl_db >> r.delta_n >> r.wall_s >> n;
      r.formation.resize(n);
      for (auto& v : r.formation) s >> v;
      if (!s || tag != budget_tag()) continue;
      std::get<2>(k) = alg;
      runs_[k] = r;
    }
  }

  void append(const Key& k, const RunRecord& r) const {
    if (file_.empty()) return;
    std::ofstream out(file_, std::ios::app);
    out.precision(17);
    out << budget_tag() << ' ' << std::get<0>(k) << ' ' << std::get<1>(k) << ' ' << std::get<2>(k)
        << ' ' << std::get<3>(k) << ' ' << r.feasible << ' ' << r.psl_db << ' ' << r.delta_n << ' '
        << r.wall_s << ' ' << r.formation.size();
    for (double v : r.formation) out << ' ' << v;
    out << '\n';
  }

  OptimizerBudget budget_;
  std::filesystem::path file_;
  std::map<Key, RunRecord> runs_;
};

std::vector<SweepRow> rows_for(RunCache& cache, double h, double r, Algorithm a,
                               const std::vector<std::uint64_t>& seeds) {
  std::vector<SweepRow> rows;
  for (auto s : seeds) {
    const auto& rec = cache.get(h, r, a, s);
    rows.push_back({0.0, a, s, rec.feasible, rec.psl_db});
  }
  return rows;
}

// Median of the measured PSLs regardless of feasibility.
double median_measured(const std::vector<SweepRow>& rows) {
  std::vector<double> v;
  for (const auto& r : rows) v.push_back(r.psl_db);
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string median_text(const std::optional<double>& m) {
  return m ? fmt(*m) + " dB" : std::string(kInfeasibleToken);
}

// --- criterion 1 -----------------------------------------------------------

void criterion_psf_oracle() {
  const auto t0 = Clock::now();
  const auto c = default_config();
  std::mt19937_64 rng(2024);
  const auto grid = PsfGrid::symmetric(c.h_max, 2.0 * c.h_max / 1000.0);
  const double k = 2.0 * std::numbers::pi / c.radar.wavelength;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_formation(c, rng);
    const auto axes = LocalAxes::from_formation(f, c.target_x);
    const auto curve = evaluate_psf(f, axes, c.radar.wavelength, PsfAxis::n, grid, true);
    // Oracle: sum over all I^2 transmit/receive pairs.
    const double ux = f[0].x - c.target_x;
    const double uz = f[0].z;
    const double norm = std::hypot(ux, uz);
    for (std::size_t g = 0; g < grid.count; ++g) {
      const double n = grid.at(g);
      const double px = c.target_x + n * uz / norm;
      const double pz = -n * ux / norm;
      std::vector<double> d(f.size());
      for (std::size_t i = 0; i < f.size(); ++i)
        d[i] = std::hypot(f[i].x - px, f[i].z - pz) - std::hypot(f[i].x - c.target_x, f[i].z);
      std::complex<double> acc = 0.0;
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j) acc += std::polar(1.0, k * (d[i] + d[j]));
      const double oracle = std::abs(acc) / static_cast<double>(f.size() * f.size());
      worst = std::max(worst, std::abs(oracle - curve.values[g]));
    }
  }
  const double t = seconds_since(t0);
  report(1, grid.count == 1001 && worst <= 1e-12 && t < 10.0,
         "PSF single sum vs double-sum oracle, 100 formations x 1001 points",
         "max |diff| " + sci(worst) + ", " + fmt(t) + " s");
}

// --- criterion 2 -----------------------------------------------------------

void criterion_two_phasor() {
  const auto t0 = Clock::now();
  auto c = default_config();
  c.num_uavs = 2;
  broadcast_per_uav(c);
  const double rho = 28.0;
  const double theta1 = 43.0 * std::numbers::pi / 180.0;
  double worst = 0.0;
  bool found = true;
  for (double b : {5.0, 10.0, 20.0}) {
    const double theta2 = theta1 - std::asin(b / rho);
    const Formation f({{c.target_x - rho * std::sin(theta1), rho * std::cos(theta1)},
                       {c.target_x - rho * std::sin(theta2), rho * std::cos(theta2)}});
    const auto axes = LocalAxes::from_formation(f, c.target_x);
    const auto curve = evaluate_psf(f, axes, c, PsfAxis::n, c.h_max);
    const auto d = estimate_resolution(curve, c.numerics.null_threshold);
    if (!d) {
      found = false;
      continue;
    }
    const double expect = c.radar.wavelength * rho / (2.0 * b);
    worst = std::max(worst, std::abs(*d - expect) / expect);
  }
  const double t = seconds_since(t0);
  report(2, found && worst <= 0.02 && t < 5.0,
         "two-phasor delta_n vs lambda rho / (2 b), b in {5, 10, 20} m",
         "max rel. error " + fmt(100.0 * worst, 3) + " %, " + fmt(t) + " s");
}

// --- criterion 3 -----------------------------------------------------------

void criterion_power_allocation() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst_rate = 0.0;
  int mismatches = 0;
  int feasible = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto c = default_config();
    c.num_slots = 50;
    c.comm.r_min = 1e6 + 9e6 * u01(rng);
    const double bw = 2e8 + 1.8e9 * u01(rng);
    const double beta_db = 10.0 + 20.0 * u01(rng);
    c.comm.bandwidth.assign(6, bw);
    c.comm.beta.assign(6, Decibel::from_db(beta_db));
    c.comm.e_max = 20.0 + 400.0 * u01(rng);
    c.gs_position = {-85.0 + 100.0 * u01(rng), 100.0 * u01(rng), 1.0 + 40.0 * u01(rng)};
    validate(c);
    const auto timeline = MissionTimeline::from_config(c);
    const auto f = random_formation(c, rng);
    const auto alloc = allocate_min_power(f, timeline, c);
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t s = 0; s < timeline.y.size(); ++s) {
        const double d = gs_distance(f[i], timeline.y[s], c.gs_position);
        const double rate = comm_throughput(alloc.eta[i * timeline.y.size() + s], d, bw,
                                            c.comm.beta[i].linear);
        worst_rate = std::max(worst_rate, std::abs(rate - c.comm.r_min) / c.comm.r_min);
      }
    // Direct C8, C9, C10 on P* = eta.
    bool direct = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
      double energy = 0.0;
      for (std::size_t s = 0; s < timeline.y.size(); ++s) {
        const double p = alloc.eta[i * timeline.y.size() + s];
        const double d = gs_distance(f[i], timeline.y[s], c.gs_position);
        direct = direct && p >= 0.0 && p <= c.comm.p_max.linear;
        direct = direct && bw * std::log2(1.0 + p * c.comm.beta[i].linear / (d * d)) >=
                               c.comm.r_min * (1.0 - 1e-9);
        energy += c.slot_duration * p;
      }
      direct = direct && energy <= c.comm.e_max;
    }
    if (direct != alloc.feasible) ++mismatches;
    if (alloc.feasible) ++feasible;
  }
  report(3, worst_rate <= 1e-9 && mismatches == 0,
         "minimum-power allocation, 1000 random link tuples",
         "max rate rel. error " + sci(worst_rate) + ", verdict mismatches " +
             std::to_string(mismatches) + " (" + std::to_string(feasible) + " feasible)");
}

// --- criteria 4-7 ----------------------------------------------------------

struct Context {
  RunCache* cache;
  std::vector<std::uint64_t> seeds;
  std::vector<double> feasible_proposed_psl;
  OptimizerBudget budget;
};

void criterion_fig2(Context& ctx, bool quick) {
  auto& cache = *ctx.cache;
  const auto proposed = rows_for(cache, 5.0, 6.0, Algorithm::proposed, ctx.seeds);
  const auto conventional = rows_for(cache, 5.0, 6.0, Algorithm::pso, ctx.seeds);
  const auto m_prop = median_psl_db(proposed);
  const double m_conv = median_measured(conventional);
  for (const auto& r : proposed)
    if (r.feasible) ctx.feasible_proposed_psl.push_back(r.psl_db);

  const auto c = default_config();
  const auto ula = ula_formation(c, 12.6);
  const auto ula_metrics =
      tomo_metrics(ula, LocalAxes::from_formation(ula, c.target_x), c, false);
  const double ula_dn = ula_metrics.delta_n.value_or(INFINITY);
  double worst_dn = 0.0;
  double worst_seed_time = 0.0;
  for (auto s : ctx.seeds) {
    worst_dn = std::max(worst_dn, cache.get(5.0, 6.0, Algorithm::proposed, s).delta_n);
    worst_seed_time = std::max(worst_seed_time, cache.get(5.0, 6.0, Algorithm::proposed, s).wall_s +
                                                    cache.get(5.0, 6.0, Algorithm::pso, s).wall_s);
  }

  // Reduced-budget smoke variant, one seed of each PSO plus the ULA.
  const auto t0 = Clock::now();
  OptimizerBudget smoke;
  smoke.iterations = 50;
  smoke.population = 100;
  run_proposed(c, smoke, 1);
  run_conventional_pso(c, smoke, 1);
  ula_formation(c, 12.6);
  const double smoke_t = seconds_since(t0);

  const bool psl_ok = m_prop && *m_prop <= -25.0;
  const bool gain_ok = m_prop && *m_prop <= m_conv - 6.0;
  const bool ula_ok = ula_dn > worst_dn;
  const bool time_ok = worst_seed_time <= 1800.0 && smoke_t < 120.0;
  report(4, psl_ok && gain_ok && ula_ok && time_ok && !quick,
         "h_max = 5 m: median proposed PSL <= -25 dB, >= 6 dB below conventional PSO, ULA "
         "mainlobe wider",
         "proposed median " + median_text(m_prop) + ", conventional median " + fmt(m_conv) +
             " dB (" +
             std::to_string(std::count_if(conventional.begin(), conventional.end(),
                                          [](const auto& r) { return r.feasible; })) +
             "/" + std::to_string(conventional.size()) + " feasible), ULA delta_n " +
             fmt(ula_dn, 3) + " m vs proposed max " + fmt(worst_dn, 3) + " m, slowest seed " +
             fmt(worst_seed_time, 0) + " s, smoke " + fmt(smoke_t, 1) + " s" +
             (quick ? " [quick budget]" : ""));
}

void criterion_fig3(Context& ctx, bool quick) {
  const std::vector<double> h_values{2.5, 5.0, 7.5, 10.0};
  std::vector<std::optional<double>> prop_medians;
  bool dominance = true;
  std::string detail;
  for (double h : h_values) {
    const auto prop = rows_for(*ctx.cache, h, 6.0, Algorithm::proposed, ctx.seeds);
    for (const auto& r : prop)
      if (r.feasible) ctx.feasible_proposed_psl.push_back(r.psl_db);
    const auto mp = median_psl_db(prop);
    prop_medians.push_back(mp);
    detail += "h=" + fmt(h, 1) + ": proposed " + median_text(mp);
    for (auto a : {Algorithm::pso, Algorithm::cga, Algorithm::genocop2}) {
      const auto mb = median_psl_db(rows_for(*ctx.cache, h, 6.0, a, ctx.seeds));
      detail += ", " + to_string(a) + " " + median_text(mb);
      // An infeasible benchmark median ranks above any feasible PSL.
      if (!mp || (mb && *mp > *mb + 0.5)) dominance = false;
    }
    detail += "; ";
  }
  bool monotone = true;
  for (std::size_t i = 0; i + 1 < prop_medians.size(); ++i)
    if (!prop_medians[i] || !prop_medians[i + 1] || *prop_medians[i + 1] < *prop_medians[i])
      monotone = false;
  report(5, monotone && dominance && !quick,
         "h_max sweep: proposed median non-decreasing and <= every benchmark median (+0.5 dB)",
         detail + "non-decreasing " + (monotone ? "yes" : "no") + ", dominance " +
             (dominance ? "yes" : "no") + (quick ? " [quick budget]" : ""));
}

void criterion_fig4(Context& ctx, bool quick) {
  const std::vector<double> r_values{5.5, 6.0, 6.5, 7.0};
  std::string detail;
  bool proposed_ok = false;
  std::optional<double> conv_cutoff;
  std::optional<double> prop_cutoff;
  for (double r : r_values) {
    const auto prop = rows_for(*ctx.cache, 5.0, r, Algorithm::proposed, ctx.seeds);
    const auto conv = rows_for(*ctx.cache, 5.0, r, Algorithm::pso, ctx.seeds);
    for (const auto& row : prop)
      if (row.feasible) ctx.feasible_proposed_psl.push_back(row.psl_db);
    const int pf = static_cast<int>(
        std::count_if(prop.begin(), prop.end(), [](const auto& x) { return x.feasible; }));
    const auto mp = median_psl_db(prop);
    const auto mc = median_psl_db(conv);
    if (r == 6.0) proposed_ok = pf == static_cast<int>(prop.size());
    if (!mc && !conv_cutoff) conv_cutoff = r;
    if (!mp && !prop_cutoff) prop_cutoff = r;
    detail += "R=" + fmt(r, 1) + ": proposed " + median_text(mp) + " (" + std::to_string(pf) +
              "/" + std::to_string(prop.size()) + "), pso " + median_text(mc) + "; ";
  }
  report(6, proposed_ok && conv_cutoff.has_value() && !quick,
         "R_min sweep: proposed feasible at 6 Mb/s, conventional PSO feasibility cutoff in sweep",
         detail + "conventional infeasible from " +
             (conv_cutoff ? fmt(*conv_cutoff, 1) + " Mb/s" : std::string("none")) +
             ", proposed infeasible from " +
             (prop_cutoff ? fmt(*prop_cutoff, 1) + " Mb/s" : std::string("none")) +
             (quick ? " [quick budget]" : ""));
}

void criterion_range(const Context& ctx, bool quick) {
  const auto& v = ctx.feasible_proposed_psl;
  const bool inside = !v.empty() && std::all_of(v.begin(), v.end(), [](double x) {
    return x >= -35.0 && x <= -15.0;
  });
  const auto [lo, hi] = v.empty() ? std::pair<double, double>{NAN, NAN}
                                  : std::pair{*std::min_element(v.begin(), v.end()),
                                              *std::max_element(v.begin(), v.end())};
  report(7, inside && !quick, "all feasible proposed PSLs of criteria 4-6 within [-35, -15] dB",
         std::to_string(v.size()) + " runs, range [" + fmt(lo) + ", " + fmt(hi) + "] dB" +
             (quick ? " [quick budget]" : ""));
}

// --- criterion 8 -----------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void criterion_properties(const Context& ctx) {
  const auto c = default_config();
  const Evaluator ev(c);
  std::vector<std::string> failed;

  // Penalty dominance on random populations.
  {
    std::mt19937_64 rng(5);
    bool ok = true;
    for (int pop = 0; pop < 10; ++pop) {
      std::vector<CandidateScore> s;
      for (int i = 0; i < 50; ++i) s.push_back(ev.evaluate(random_formation(c, rng)).score());
      double psl_max = 0.0;
      for (const auto& x : s) psl_max = std::max(psl_max, x.psl);
      double worst_feasible = -INFINITY;
      double best_infeasible = INFINITY;
      for (const auto& x : s) {
        const double f = penalized_fitness(x.feasible, x.penalty, x.psl, psl_max).value;
        if (x.feasible)
          worst_feasible = std::max(worst_feasible, f);
        else
          best_infeasible = std::min(best_infeasible, f);
      }
      ok = ok && best_infeasible > worst_feasible;
    }
    if (!ok) failed.push_back("penalty dominance");
  }

  // Wall safety.
  {
    const auto box = full_encoding_box(c);
    Rng rng(9);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> p(box.dim());
      std::vector<double> v(box.dim());
      for (std::size_t d = 0; d < p.size(); ++d) {
        p[d] = std::uniform_real_distribution<double>(box.lower[d], box.upper[d])(rng);
        v[d] = std::uniform_real_distribution<double>(-1e4, 1e4)(rng);
      }
      pso_position_update(p, v);
      reflect_walls(p, v, box);
      ok = ok && box.contains(p);
    }
    if (!ok) failed.push_back("wall safety");
  }

  // Seed determinism and monotonicity with small budgets.
  {
    OptimizerBudget b;
    b.iterations = 8;
    b.population = 16;
    b.genocop.population = 16;
    b.genocop.max_inner = 6;
    const auto dir = std::filesystem::temp_directory_path() / "tomoswarm_acceptance";
    bool same = true;
    bool monotone = true;
    for (auto a : {Algorithm::proposed, Algorithm::pso, Algorithm::cga, Algorithm::genocop2}) {
      const auto r1 = run_algorithm(a, c, b, 11);
      const auto r2 = run_algorithm(a, c, b, 11);
      write_result(dir / "a", r1);
      write_result(dir / "b", r2);
      for (const char* f : {"result.csv", "formation.csv", "powers.csv", "history.csv"})
        same = same && slurp(dir / "a" / f) == slurp(dir / "b" / f);
      for (std::size_t i = 1; i < r1.history.size(); ++i)
        monotone = monotone && r1.history[i].best_fitness <= r1.history[i - 1].best_fitness;
    }
    std::filesystem::remove_all(dir);
    if (!same) failed.push_back("seed determinism");
    if (!monotone) failed.push_back("global-best monotonicity");
  }

  // Normalization and grid refinement.
  {
    std::mt19937_64 rng(13);
    bool norm = true;
    double worst_refine = 0.0;
    std::vector<Formation> formations;
    for (int i = 0; i < 10; ++i) formations.push_back(random_formation(c, rng));
    formations.push_back(ula_formation(c, 12.6));
    for (const auto& f : formations) {
      const auto axes = LocalAxes::from_formation(f, c.target_x);
      for (bool comp : {true, false}) {
        auto cc = c;
        cc.numerics.phase_compensation = comp;
        for (auto axis : {PsfAxis::n, PsfAxis::r})
          for (double v : evaluate_psf(f, axes, cc, axis, c.h_max).values)
            norm = norm && v >= 0.0 && v <= 1.0;
      }
      auto cc = c;
      const auto coarse = tomo_metrics(f, axes, cc, false);
      cc.numerics.psf_grid_step = coarse.grid_step / 4.0;
      const auto fine = tomo_metrics(f, axes, cc, false);
      worst_refine = std::max(worst_refine, std::abs(coarse.psl_db - fine.psl_db));
    }
    (void)ctx;
    if (!norm) failed.push_back("PSF normalization");
    if (!(worst_refine < 0.1)) failed.push_back("grid refinement (" + fmt(worst_refine, 3) + " dB)");
    std::string detail = "grid refinement max " + fmt(worst_refine, 4) + " dB";
    std::string names;
    for (const auto& f : failed) names += (names.empty() ? "" : ", ") + f;
    report(8, failed.empty(),
           "properties: penalty dominance, wall safety, determinism, monotonicity, "
           "normalization, grid refinement",
           failed.empty() ? detail : "failed: " + names);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  bool quick = false;
  std::string cache_file;
  int seeds = 5;
  app.add_flag("--quick", quick, "Reduced budgets (development only)");
  app.add_option("--cache", cache_file, "Persist optimizer runs in this file");
  app.add_option("--seeds", seeds, "Seeds per configuration");
  CLI11_PARSE(app, argc, argv);

  OptimizerBudget budget;
  if (quick) {
    budget.iterations = 30;
    budget.population = 40;
  }
  RunCache cache(budget, cache_file);
  Context ctx{&cache, {}, {}, budget};
  for (int s = 1; s <= seeds; ++s) ctx.seeds.push_back(static_cast<std::uint64_t>(s));

  criterion_psf_oracle();
  criterion_two_phasor();
  criterion_power_allocation();
  criterion_fig2(ctx, quick);
  criterion_fig3(ctx, quick);
  criterion_fig4(ctx, quick);
  criterion_range(ctx, quick);
  criterion_properties(ctx);
  std::cout << "acceptance: " << (8 - failures) << "/8 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
