#include "tomoswarm/psf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tomoswarm {

PsfGrid PsfGrid::symmetric(double half_width, double max_step) {
  if (!(half_width > 0.0) || !(max_step > 0.0))
    throw std::invalid_argument("psf grid: window and step must be positive");
  const double m = std::ceil(half_width / max_step - 1e-9);
  PsfGrid g;
  g.step = half_width / m;
  g.count = 2 * static_cast<std::size_t>(m) + 1;
  g.start = -m * g.step;
  return g;
}

double magnitude_to_db(double v) { return 20.0 * std::log10(v); }

double resolve_grid_step(const Formation& formation, const ScenarioConfig& config) {
  const double lambda = config.radar.wavelength;
  double step = config.numerics.psf_grid_step;
  if (step <= 0.0) {
    step = lambda / 8.0;
    const double b_max = max_baseline(formation);
    if (b_max > 0.0) {
      const double rho1 = slant_range(formation.reference(), config.target_x);
      step = std::min(step, lambda * rho1 / (16.0 * b_max));
    }
  }
  while (step > lambda / 8.0) step *= 0.5;
  return step;
}

namespace {

template <PsfAxis Axis>
void sample(const Formation& f, const LocalAxes& axes, double k, const PsfGrid& grid,
            bool compensate, std::vector<double>& out) {
  const std::size_t count = f.size();
  const double inv = 1.0 / static_cast<double>(count * count);
  auto range = [&](const Point2& q, double s) {
    if constexpr (Axis == PsfAxis::n)
      return range_to_elevation_point(q, axes, s);
    else
      return range_to_slant_point(q, axes, s);
  };
  std::vector<double> offset(count, 0.0);
  if (compensate)
    for (std::size_t i = 0; i < count; ++i) offset[i] = range(f[i], 0.0);

  out.resize(grid.count);
  const auto m = static_cast<double>(grid.center());
  for (std::size_t g = 0; g < grid.count; ++g) {
    const double s = (static_cast<double>(g) - m) * grid.step;
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double phase = k * (range(f[i], s) - offset[i]);
      re += std::cos(phase);
      im += std::sin(phase);
    }
    out[g] = std::min(1.0, (re * re + im * im) * inv);
  }
}

}  // namespace

PsfCurve evaluate_psf(const Formation& formation, const LocalAxes& axes, double wavelength,
                      PsfAxis axis, const PsfGrid& grid, bool phase_compensation) {
  if (grid.step > wavelength / 8.0 * (1.0 + 1e-12))
    throw GridTooCoarse("psf grid step exceeds lambda/8");
  PsfCurve curve;
  curve.axis = axis;
  curve.grid = grid;
  curve.wavelength = wavelength;
  curve.phase_compensated = phase_compensation;
  const double k = 2.0 * std::numbers::pi / wavelength;
  if (axis == PsfAxis::n)
    sample<PsfAxis::n>(formation, axes, k, grid, phase_compensation, curve.values);
  else
    sample<PsfAxis::r>(formation, axes, k, grid, phase_compensation, curve.values);
  return curve;
}

PsfCurve evaluate_psf(const Formation& formation, const LocalAxes& axes,
                      const ScenarioConfig& config, PsfAxis axis, double window) {
  const auto grid = PsfGrid::symmetric(window, resolve_grid_step(formation, config));
  return evaluate_psf(formation, axes, config.radar.wavelength, axis, grid,
                      config.numerics.phase_compensation);
}

namespace {

// First qualifying local minimum walking outward from the center in
// direction `dir` (+1 or -1); returns its refined position.
std::optional<double> first_null(const PsfCurve& c, int dir, double threshold) {
  const auto& v = c.values;
  const auto n = static_cast<long>(v.size());
  const auto center = static_cast<long>(c.grid.center());
  for (long j = center + dir; j >= 1 && j <= n - 2; j += dir) {
    const double here = v[j];
    if (!(here <= v[j - 1] && here <= v[j + 1])) continue;
    // Near a zero the response is quadratic, so the vertex of the parabola
    // through the three samples estimates the true minimum.
    const double denom = v[j - 1] - 2.0 * here + v[j + 1];
    double shift = denom > 0.0 ? 0.5 * (v[j - 1] - v[j + 1]) / denom : 0.0;
    shift = std::clamp(shift, -0.5, 0.5);
    const double vertex = here - 0.25 * (v[j - 1] - v[j + 1]) * shift;
    if (std::min(here, vertex) < threshold)
      return c.position(static_cast<std::size_t>(j)) + shift * c.grid.step;
  }
  return std::nullopt;
}

}  // namespace

std::optional<double> estimate_resolution(const PsfCurve& curve, double null_threshold) {
  const auto pos = first_null(curve, +1, null_threshold);
  if (!pos) return std::nullopt;
  const auto neg = first_null(curve, -1, null_threshold);
  if (!neg) return std::nullopt;
  return 0.5 * (*pos - *neg);
}

double peak_sidelobe_level(const PsfCurve& curve, double delta_n, double h_max) {
  if (!(delta_n < h_max)) throw InvalidMainlobe("mainlobe covers the whole PSL window");
  double peak = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    const double s = std::abs(curve.position(i));
    if (s > delta_n && s <= h_max * (1.0 + 1e-12)) {
      peak = std::max(peak, curve.values[i]);
      any = true;
    }
  }
  if (!any) throw InvalidMainlobe("no samples outside the mainlobe");
  return peak;
}

TomoMetrics tomo_metrics(const Formation& formation, const LocalAxes& axes,
                         const ScenarioConfig& config, bool with_slant_curve) {
  TomoMetrics m;
  m.grid_step = resolve_grid_step(formation, config);
  const auto grid = PsfGrid::symmetric(config.h_max, m.grid_step);
  const double lambda = config.radar.wavelength;
  const bool comp = config.numerics.phase_compensation;
  const double threshold = config.numerics.null_threshold;

  const auto n_curve = evaluate_psf(formation, axes, lambda, PsfAxis::n, grid, comp);
  m.mainlobe_peak = n_curve.values[grid.center()];
  m.delta_n = estimate_resolution(n_curve, threshold);
  if (m.delta_n && *m.delta_n < config.h_max) {
    m.psl = peak_sidelobe_level(n_curve, *m.delta_n, config.h_max);
  } else {
    m.psl = *std::max_element(n_curve.values.begin(), n_curve.values.end());
  }
  m.psl_db = magnitude_to_db(m.psl);

  const bool psf_slant = config.numerics.slant_resolution == SlantResolution::psf;
  if (with_slant_curve || psf_slant) {
    const auto r_curve = evaluate_psf(formation, axes, lambda, PsfAxis::r, grid, comp);
    m.delta_r_psf = estimate_resolution(r_curve, threshold);
  }
  m.delta_r = psf_slant ? m.delta_r_psf
                        : std::optional<double>(kSpeedOfLight / (2.0 * config.radar.b_noise));
  return m;
}

}  // namespace tomoswarm
