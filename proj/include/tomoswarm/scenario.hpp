#pragma once

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace tomoswarm {

/// Raised for malformed config files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a config violates a parameter invariant. The message starts
/// with the name of the violated invariant (e.g. "altitude_bounds").
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quantity given in decibels. The original dB value is kept so that a
/// config survives save/load unchanged; `linear` is derived from it.
struct Decibel {
  double db = 0.0;
  double linear = 1.0;

  static Decibel from_db(double db);
  /// dBm interpreted as a level relative to 1 mW, i.e. 10^(x/10) * 1e-3.
  static Decibel from_dbm(double dbm);
  friend bool operator==(const Decibel&, const Decibel&) = default;
};

/// An angle given in degrees at the file boundary and used in radians.
struct Angle {
  double deg = 0.0;
  double rad = 0.0;

  static Angle from_degrees(double deg);
  friend bool operator==(const Angle&, const Angle&) = default;
};

/// How "10 dB" power entries (P_t, P_max) are read.
enum class PowerReference { dBW, dBm };

/// How the printed SNR_min entry is read: as a plain dB ratio or as dBm.
enum class SnrMinUnit { dB, dBm };

/// Source of the slant-range resolution checked against delta_r^max.
enum class SlantResolution {
  /// Range-compression limit c / (2 B_noise).
  bandwidth,
  /// Peak-to-null width of the narrowband r-axis PSF.
  psf,
};

/// Energy penalty g12 form.
enum class EnergyPenalty {
  /// Sum over UAVs of the per-UAV budget exceedance (matches C12).
  per_uav,
  /// Literal per-slot form [eta_ik - E_max/dt]^+ summed over i and k.
  per_slot,
};

struct RadarParams {
  Decibel sigma0;            // backscatter coefficient
  Decibel p_t;               // transmit power, W after conversion
  Decibel g_t;               // dBi
  Decibel g_r;               // dBi
  double wavelength = 0.12;  // m
  Decibel loss;              // total radar losses
  double t_sys = 400.0;      // K
  Decibel noise_figure;
  double b_noise = 3e9;      // Hz
  Angle beamwidth_3db;
  Decibel snr_min;

  friend bool operator==(const RadarParams&, const RadarParams&) = default;
};

struct CommParams {
  Decibel p_max;                  // W after conversion
  double e_max = 570.0;           // J
  std::vector<double> bandwidth;  // Hz, one entry per UAV
  std::vector<Decibel> beta;      // reference gain over noise, per UAV
  double r_min = 6e6;             // bit/s

  friend bool operator==(const CommParams&, const CommParams&) = default;
};

struct Numerics {
  /// Grid spacing for PSF sampling in meters; 0 selects the per-formation
  /// automatic step min(lambda/8, lambda*rho_1/(16*b_max)).
  double psf_grid_step = 0.0;
  double null_threshold = 1e-3;
  PowerReference db_reference = PowerReference::dBW;
  bool phase_compensation = true;
  SnrMinUnit snr_min_unit = SnrMinUnit::dBm;
  SlantResolution slant_resolution = SlantResolution::bandwidth;
  EnergyPenalty energy_penalty = EnergyPenalty::per_uav;

  friend bool operator==(const Numerics&, const Numerics&) = default;
};

/// Full parameter set of a sensing/offloading scenario. Immutable after
/// construction by convention; share by const reference.
struct ScenarioConfig {
  int num_uavs = 6;
  int num_slots = 200;
  double slot_duration = 1.0;  // s
  double swarm_speed = 4.3;    // m/s
  double target_x = 20.0;      // m
  std::array<double, 3> gs_position{-85.0, 400.0, 25.0};
  std::array<double, 2> altitude_bounds{1.0, 100.0};
  std::array<Angle, 2> look_angle_bounds;
  double min_separation = 2.0;  // m
  double min_swath = 55.0;      // m
  double h_max = 5.0;           // m
  double epsilon = 0.05;
  std::array<double, 2> max_resolutions{1.0, 0.2};  // (delta_n, delta_r), m
  RadarParams radar;
  CommParams comm;
  Numerics numerics;

  double z_min() const { return altitude_bounds[0]; }
  double z_max() const { return altitude_bounds[1]; }
  double theta_min() const { return look_angle_bounds[0].rad; }
  double theta_max() const { return look_angle_bounds[1].rad; }
  double delta_n_max() const { return max_resolutions[0]; }
  double delta_r_max() const { return max_resolutions[1]; }

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Default system parameters.
ScenarioConfig default_config();

/// Throws ValidationError naming the first violated invariant.
void validate(const ScenarioConfig& config);

/// Rebuilds the derived linear values of every dB field from its dB value
/// under the config's conventions. Call after editing dB values or flags.
void apply_db_conventions(ScenarioConfig& config);

ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::filesystem::path& path);
std::string format_config(const ScenarioConfig& config);
void save_config(const ScenarioConfig& config, const std::filesystem::path& path);

/// Resizes per-UAV comm vectors to `num_uavs`, repeating the first entry.
void broadcast_per_uav(ScenarioConfig& config);

std::string to_string(PowerReference v);
std::string to_string(SnrMinUnit v);
std::string to_string(SlantResolution v);
std::string to_string(EnergyPenalty v);

}  // namespace tomoswarm
