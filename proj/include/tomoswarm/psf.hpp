#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tomoswarm/geometry.hpp"
#include "tomoswarm/scenario.hpp"

namespace tomoswarm {

enum class PsfAxis { n, r };

/// Symmetric sampling grid covering [-half_width, half_width].
struct PsfGrid {
  double start = 0.0;
  double step = 0.0;
  std::size_t count = 0;

  /// Grid with `count = 2*m + 1` points where m = ceil(half_width / max_step);
  /// the step is shrunk so both window edges are sampled exactly.
  static PsfGrid symmetric(double half_width, double max_step);
  double at(std::size_t i) const {
    return (static_cast<double>(i) - static_cast<double>(center())) * step;
  }
  std::size_t center() const { return count / 2; }
};

/// Sampled MIMO PSF along one local axis. Values are magnitudes of the
/// normalized tomographic response and lie in [0, 1].
struct PsfCurve {
  PsfAxis axis = PsfAxis::n;
  PsfGrid grid;
  std::vector<double> values;
  double wavelength = 0.0;
  bool phase_compensated = false;

  double position(std::size_t i) const { return grid.at(i); }
};

/// Per-formation evaluation summary.
struct TomoMetrics {
  std::optional<double> delta_n;
  /// Slant-range resolution checked against delta_r^max (see SlantResolution).
  std::optional<double> delta_r;
  /// Peak-to-null width of the r-axis PSF, when that curve was evaluated.
  std::optional<double> delta_r_psf;
  double psl = 1.0;
  double psl_db = 0.0;
  double mainlobe_peak = 0.0;
  double grid_step = 0.0;

  bool resolution_n_found() const { return delta_n.has_value(); }
  bool resolution_r_found() const { return delta_r.has_value(); }
};

class GridTooCoarse : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidMainlobe : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// PSF values are response magnitudes, so levels are 20*log10.
double magnitude_to_db(double v);

/// Grid step used for a formation: the configured step, or
/// min(lambda/8, lambda*rho_1/(16*b_max)) when set to auto; halved until it
/// does not exceed lambda/8.
double resolve_grid_step(const Formation& formation, const ScenarioConfig& config);

/// Samples the PSF on an explicit grid. Throws GridTooCoarse if the step
/// exceeds lambda/8.
PsfCurve evaluate_psf(const Formation& formation, const LocalAxes& axes, double wavelength,
                      PsfAxis axis, const PsfGrid& grid, bool phase_compensation);

/// Samples the PSF over [-window, window] using the configured grid policy.
PsfCurve evaluate_psf(const Formation& formation, const LocalAxes& axes,
                      const ScenarioConfig& config, PsfAxis axis, double window);

/// Peak-to-null resolution: half the distance between the first nulls on
/// either side of the center sample. A null is a local minimum whose sample
/// or parabolic vertex (through the three surrounding samples) lies below
/// `null_threshold`; its position is the vertex.
std::optional<double> estimate_resolution(const PsfCurve& curve, double null_threshold = 1e-3);

/// Maximum of the curve over |s| in (delta_n, h_max].
double peak_sidelobe_level(const PsfCurve& curve, double delta_n, double h_max);

/// Evaluates the n-axis curve (and the r-axis curve when requested or when
/// the slant resolution is PSF-derived), both resolutions and the PSL. When
/// no valid mainlobe is found the PSL is the maximum over the whole window.
TomoMetrics tomo_metrics(const Formation& formation, const LocalAxes& axes,
                         const ScenarioConfig& config, bool with_slant_curve = true);

/// Speed of light used for the range-compression resolution limit.
inline constexpr double kSpeedOfLight = 299792458.0;

}  // namespace tomoswarm
