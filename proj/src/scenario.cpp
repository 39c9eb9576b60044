#include "tomoswarm/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <system_error>

namespace tomoswarm {

Decibel Decibel::from_db(double db) { return {db, std::pow(10.0, db / 10.0)}; }

Decibel Decibel::from_dbm(double dbm) {
  return {dbm, std::pow(10.0, dbm / 10.0) * 1e-3};
}

Angle Angle::from_degrees(double deg) {
  return {deg, deg * std::numbers::pi / 180.0};
}

ScenarioConfig default_config() {
  ScenarioConfig c;
  c.num_uavs = 6;
  c.num_slots = 200;
  c.slot_duration = 1.0;
  c.swarm_speed = 4.3;
  c.target_x = 20.0;
  c.gs_position = {-85.0, 400.0, 25.0};
  c.altitude_bounds = {1.0, 100.0};
  c.look_angle_bounds = {Angle::from_degrees(37.24), Angle::from_degrees(48.7)};
  c.min_separation = 2.0;
  c.min_swath = 55.0;
  c.h_max = 5.0;
  c.epsilon = 0.05;
  c.max_resolutions = {1.0, 0.2};

  c.radar.sigma0 = Decibel::from_db(-10.0);
  c.radar.p_t = Decibel::from_db(10.0);
  c.radar.g_t = Decibel::from_db(5.0);
  c.radar.g_r = Decibel::from_db(5.0);
  c.radar.wavelength = 0.12;
  c.radar.loss = Decibel::from_db(6.0);
  c.radar.t_sys = 400.0;
  c.radar.noise_figure = Decibel::from_db(5.0);
  c.radar.b_noise = 3e9;
  c.radar.beamwidth_3db = Angle::from_degrees(40.0);
  c.radar.snr_min = Decibel::from_db(-10.0);

  c.comm.p_max = Decibel::from_db(10.0);
  c.comm.e_max = 570.0;
  c.comm.bandwidth = std::vector<double>(6, 1e9);
  c.comm.beta = std::vector<Decibel>(6, Decibel::from_db(20.0));
  c.comm.r_min = 6e6;

  apply_db_conventions(c);
  return c;
}

namespace {

Decibel power_from(double db, PowerReference ref) {
  return ref == PowerReference::dBW ? Decibel::from_db(db) : Decibel::from_dbm(db);
}

[[noreturn]] void fail(const std::string& what) { throw ValidationError(what); }

}  // namespace

void apply_db_conventions(ScenarioConfig& c) {
  auto& r = c.radar;
  r.sigma0 = Decibel::from_db(r.sigma0.db);
  r.p_t = power_from(r.p_t.db, c.numerics.db_reference);
  r.g_t = Decibel::from_db(r.g_t.db);
  r.g_r = Decibel::from_db(r.g_r.db);
  r.loss = Decibel::from_db(r.loss.db);
  r.noise_figure = Decibel::from_db(r.noise_figure.db);
  r.snr_min = c.numerics.snr_min_unit == SnrMinUnit::dB ? Decibel::from_db(r.snr_min.db)
                                                        : Decibel::from_dbm(r.snr_min.db);
  c.comm.p_max = power_from(c.comm.p_max.db, c.numerics.db_reference);
  for (auto& b : c.comm.beta) b = Decibel::from_db(b.db);
}

void broadcast_per_uav(ScenarioConfig& c) {
  const auto n = static_cast<std::size_t>(std::max(c.num_uavs, 0));
  auto uniform = [](const auto& v) {
    return !v.empty() && std::all_of(v.begin(), v.end(), [&](const auto& x) { return x == v.front(); });
  };
  if (c.comm.bandwidth.size() != n && uniform(c.comm.bandwidth))
    c.comm.bandwidth.assign(n, c.comm.bandwidth.front());
  if (c.comm.beta.size() != n && uniform(c.comm.beta)) c.comm.beta.assign(n, c.comm.beta.front());
}

void validate(const ScenarioConfig& c) {
  if (c.num_uavs < 2) fail("num_uavs: at least 2 UAVs are required");
  if (c.num_slots < 1) fail("num_slots: at least one slot is required");
  if (!(c.slot_duration > 0.0)) fail("slot_duration: must be positive");
  if (!(c.swarm_speed >= 0.0)) fail("swarm_speed: must be non-negative");
  if (!(c.altitude_bounds[0] > 0.0)) fail("altitude_bounds: z_min must be positive");
  if (!(c.altitude_bounds[0] <= c.altitude_bounds[1]))
    fail("altitude_bounds: z_min must not exceed z_max");
  if (!(c.look_angle_bounds[0].rad <= c.look_angle_bounds[1].rad))
    fail("look_angle_bounds: theta_min must not exceed theta_max");
  for (const auto& a : c.look_angle_bounds)
    if (!(std::abs(a.deg) < 90.0)) fail("look_angle_bounds: angles must lie in (-90, 90) deg");
  if (!(c.epsilon >= 0.0 && c.epsilon <= 0.05)) fail("epsilon range: must lie in [0, 0.05]");
  if (!(c.min_separation >= 0.0)) fail("min_separation: must be non-negative");
  if (!(c.min_swath >= 0.0)) fail("min_swath: must be non-negative");
  if (!(c.h_max > 0.0)) fail("h_max: must be positive");
  if (!(c.max_resolutions[0] > 0.0 && c.max_resolutions[1] > 0.0))
    fail("max_resolutions: must be positive");

  const auto& r = c.radar;
  if (!(r.wavelength > 0.0)) fail("radar.wavelength: must be positive");
  if (!(r.t_sys > 0.0)) fail("radar.t_sys: must be positive");
  if (!(r.b_noise > 0.0)) fail("radar.b_noise: must be positive");
  if (!(r.beamwidth_3db.rad >= 0.0)) fail("radar.beamwidth_3db: must be non-negative");
  for (const Decibel* d : {&r.sigma0, &r.p_t, &r.g_t, &r.g_r, &r.loss, &r.noise_figure, &r.snr_min})
    if (!(d->linear > 0.0) || !std::isfinite(d->linear)) fail("radar: dB values must be finite");

  const auto& m = c.comm;
  const auto n = static_cast<std::size_t>(c.num_uavs);
  if (m.bandwidth.size() != n) fail("comm.bandwidth: need one entry or one per UAV");
  if (m.beta.size() != n) fail("comm.beta: need one entry or one per UAV");
  for (double b : m.bandwidth)
    if (!(b > 0.0)) fail("comm.bandwidth: must be positive");
  for (const auto& b : m.beta)
    if (!(b.linear > 0.0) || !std::isfinite(b.linear)) fail("comm.beta: must be finite");
  if (!(m.p_max.linear > 0.0)) fail("comm.p_max: must be positive");
  if (!(m.e_max > 0.0)) fail("comm.e_max: must be positive");
  if (!(m.r_min >= 0.0)) fail("comm.r_min: must be non-negative");

  const auto& nu = c.numerics;
  if (!(nu.psf_grid_step >= 0.0)) fail("numerics.psf_grid_step: must be >= 0 (0 = auto)");
  if (!(nu.null_threshold > 0.0 && nu.null_threshold < 1.0))
    fail("numerics.null_threshold: must lie in (0, 1)");
}

// ---------------------------------------------------------------------------
// Key-value text format

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_number(const std::string& key, const std::string& token) {
  const std::string t = trim(token);
  double v = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  auto res = std::from_chars(first, last, v);
  if (t.empty() || res.ec != std::errc() || res.ptr != last)
    throw ParseError("key '" + key + "': expected a number, got '" + t + "'");
  return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(key, item));
  if (out.empty()) throw ParseError("key '" + key + "': empty value");
  return out;
}

template <std::size_t N>
std::array<double, N> parse_fixed(const std::string& key, const std::string& value) {
  auto v = parse_list(key, value);
  if (v.size() != N)
    throw ParseError("key '" + key + "': expected " + std::to_string(N) + " values");
  std::array<double, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  const double v = parse_number(key, value);
  if (v != std::floor(v) || std::abs(v) > 1e9)
    throw ParseError("key '" + key + "': expected an integer");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& value) {
  const auto t = trim(value);
  if (t == "true" || t == "1" || t == "on") return true;
  if (t == "false" || t == "0" || t == "off") return false;
  throw ParseError("key '" + key + "': expected true/false");
}

template <class E>
E parse_enum(const std::string& key, const std::string& value,
             std::initializer_list<std::pair<const char*, E>> options) {
  const auto t = trim(value);
  for (const auto& [name, e] : options)
    if (t == name) return e;
  throw ParseError("key '" + key + "': unknown option '" + t + "'");
}

using Setter = std::function<void(ScenarioConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"num_uavs", [](auto& c, auto& k, auto& v) { c.num_uavs = parse_int(k, v); }},
      {"num_slots", [](auto& c, auto& k, auto& v) { c.num_slots = parse_int(k, v); }},
      {"slot_duration", [](auto& c, auto& k, auto& v) { c.slot_duration = parse_number(k, v); }},
      {"swarm_speed", [](auto& c, auto& k, auto& v) { c.swarm_speed = parse_number(k, v); }},
      {"target_x", [](auto& c, auto& k, auto& v) { c.target_x = parse_number(k, v); }},
      {"gs_position", [](auto& c, auto& k, auto& v) { c.gs_position = parse_fixed<3>(k, v); }},
      {"altitude_bounds",
       [](auto& c, auto& k, auto& v) { c.altitude_bounds = parse_fixed<2>(k, v); }},
      {"look_angle_bounds",
       [](auto& c, auto& k, auto& v) {
         auto a = parse_fixed<2>(k, v);
         c.look_angle_bounds = {Angle::from_degrees(a[0]), Angle::from_degrees(a[1])};
       }},
      {"min_separation", [](auto& c, auto& k, auto& v) { c.min_separation = parse_number(k, v); }},
      {"min_swath", [](auto& c, auto& k, auto& v) { c.min_swath = parse_number(k, v); }},
      {"h_max", [](auto& c, auto& k, auto& v) { c.h_max = parse_number(k, v); }},
      {"epsilon", [](auto& c, auto& k, auto& v) { c.epsilon = parse_number(k, v); }},
      {"max_resolutions",
       [](auto& c, auto& k, auto& v) { c.max_resolutions = parse_fixed<2>(k, v); }},
      {"radar.sigma0", [](auto& c, auto& k, auto& v) { c.radar.sigma0.db = parse_number(k, v); }},
      {"radar.p_t", [](auto& c, auto& k, auto& v) { c.radar.p_t.db = parse_number(k, v); }},
      {"radar.g_t", [](auto& c, auto& k, auto& v) { c.radar.g_t.db = parse_number(k, v); }},
      {"radar.g_r", [](auto& c, auto& k, auto& v) { c.radar.g_r.db = parse_number(k, v); }},
      {"radar.wavelength",
       [](auto& c, auto& k, auto& v) { c.radar.wavelength = parse_number(k, v); }},
      {"radar.loss", [](auto& c, auto& k, auto& v) { c.radar.loss.db = parse_number(k, v); }},
      {"radar.t_sys", [](auto& c, auto& k, auto& v) { c.radar.t_sys = parse_number(k, v); }},
      {"radar.noise_figure",
       [](auto& c, auto& k, auto& v) { c.radar.noise_figure.db = parse_number(k, v); }},
      {"radar.b_noise", [](auto& c, auto& k, auto& v) { c.radar.b_noise = parse_number(k, v); }},
      {"radar.beamwidth_3db",
       [](auto& c, auto& k, auto& v) {
         c.radar.beamwidth_3db = Angle::from_degrees(parse_number(k, v));
       }},
      {"radar.snr_min", [](auto& c, auto& k, auto& v) { c.radar.snr_min.db = parse_number(k, v); }},
      {"comm.p_max", [](auto& c, auto& k, auto& v) { c.comm.p_max.db = parse_number(k, v); }},
      {"comm.e_max", [](auto& c, auto& k, auto& v) { c.comm.e_max = parse_number(k, v); }},
      {"comm.bandwidth", [](auto& c, auto& k, auto& v) { c.comm.bandwidth = parse_list(k, v); }},
      {"comm.beta",
       [](auto& c, auto& k, auto& v) {
         c.comm.beta.clear();
         for (double d : parse_list(k, v)) c.comm.beta.push_back(Decibel{d, 0.0});
       }},
      {"comm.r_min", [](auto& c, auto& k, auto& v) { c.comm.r_min = parse_number(k, v); }},
      {"numerics.psf_grid_step",
       [](auto& c, auto& k, auto& v) {
         c.numerics.psf_grid_step = trim(v) == "auto" ? 0.0 : parse_number(k, v);
       }},
      {"numerics.null_threshold",
       [](auto& c, auto& k, auto& v) { c.numerics.null_threshold = parse_number(k, v); }},
      {"numerics.db_reference",
       [](auto& c, auto& k, auto& v) {
         c.numerics.db_reference = parse_enum<PowerReference>(
             k, v, {{"dBW", PowerReference::dBW}, {"dBm", PowerReference::dBm}});
       }},
      {"numerics.phase_compensation",
       [](auto& c, auto& k, auto& v) { c.numerics.phase_compensation = parse_bool(k, v); }},
      {"numerics.snr_min_unit",
       [](auto& c, auto& k, auto& v) {
         c.numerics.snr_min_unit =
             parse_enum<SnrMinUnit>(k, v, {{"dB", SnrMinUnit::dB}, {"dBm", SnrMinUnit::dBm}});
       }},
      {"numerics.slant_resolution",
       [](auto& c, auto& k, auto& v) {
         c.numerics.slant_resolution = parse_enum<SlantResolution>(
             k, v, {{"bandwidth", SlantResolution::bandwidth}, {"psf", SlantResolution::psf}});
       }},
      {"numerics.energy_penalty",
       [](auto& c, auto& k, auto& v) {
         c.numerics.energy_penalty = parse_enum<EnergyPenalty>(
             k, v, {{"per_uav", EnergyPenalty::per_uav}, {"per_slot", EnergyPenalty::per_slot}});
       }},
  };
  return table;
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + fmt(v[i]);
  return out;
}

}  // namespace

std::string to_string(PowerReference v) { return v == PowerReference::dBW ? "dBW" : "dBm"; }
std::string to_string(SnrMinUnit v) { return v == SnrMinUnit::dB ? "dB" : "dBm"; }
std::string to_string(SlantResolution v) {
  return v == SlantResolution::bandwidth ? "bandwidth" : "psf";
}
std::string to_string(EnergyPenalty v) {
  return v == EnergyPenalty::per_uav ? "per_uav" : "per_slot";
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig c = default_config();
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end())
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    it->second(c, key, value);
  }
  broadcast_per_uav(c);
  apply_db_conventions(c);
  validate(c);
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::system_error(errno, std::generic_category(), "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_config(const ScenarioConfig& c) {
  std::vector<double> beta_db;
  for (const auto& b : c.comm.beta) beta_db.push_back(b.db);
  std::ostringstream o;
  o << "# tomoswarm scenario; angles in degrees, dB fields as noted\n"
    << "num_uavs = " << c.num_uavs << "\n"
    << "num_slots = " << c.num_slots << "\n"
    << "slot_duration = " << fmt(c.slot_duration) << "  # s\n"
    << "swarm_speed = " << fmt(c.swarm_speed) << "  # m/s\n"
    << "target_x = " << fmt(c.target_x) << "  # m\n"
    << "gs_position = " << join({c.gs_position.begin(), c.gs_position.end()}) << "  # m\n"
    << "altitude_bounds = " << join({c.altitude_bounds.begin(), c.altitude_bounds.end()})
    << "  # m\n"
    << "look_angle_bounds = "
    << join({c.look_angle_bounds[0].deg, c.look_angle_bounds[1].deg}) << "  # deg\n"
    << "min_separation = " << fmt(c.min_separation) << "  # m\n"
    << "min_swath = " << fmt(c.min_swath) << "  # m\n"
    << "h_max = " << fmt(c.h_max) << "  # m\n"
    << "epsilon = " << fmt(c.epsilon) << "\n"
    << "max_resolutions = " << join({c.max_resolutions.begin(), c.max_resolutions.end()})
    << "  # delta_n, delta_r in m\n"
    << "radar.sigma0 = " << fmt(c.radar.sigma0.db) << "  # dB\n"
    << "radar.p_t = " << fmt(c.radar.p_t.db) << "  # dB, see numerics.db_reference\n"
    << "radar.g_t = " << fmt(c.radar.g_t.db) << "  # dBi\n"
    << "radar.g_r = " << fmt(c.radar.g_r.db) << "  # dBi\n"
    << "radar.wavelength = " << fmt(c.radar.wavelength) << "  # m\n"
    << "radar.loss = " << fmt(c.radar.loss.db) << "  # dB\n"
    << "radar.t_sys = " << fmt(c.radar.t_sys) << "  # K\n"
    << "radar.noise_figure = " << fmt(c.radar.noise_figure.db) << "  # dB\n"
    << "radar.b_noise = " << fmt(c.radar.b_noise) << "  # Hz\n"
    << "radar.beamwidth_3db = " << fmt(c.radar.beamwidth_3db.deg) << "  # deg\n"
    << "radar.snr_min = " << fmt(c.radar.snr_min.db) << "  # see numerics.snr_min_unit\n"
    << "comm.p_max = " << fmt(c.comm.p_max.db) << "  # dB, see numerics.db_reference\n"
    << "comm.e_max = " << fmt(c.comm.e_max) << "  # J\n"
    << "comm.bandwidth = " << join(c.comm.bandwidth) << "  # Hz\n"
    << "comm.beta = " << join(beta_db) << "  # dB\n"
    << "comm.r_min = " << fmt(c.comm.r_min) << "  # bit/s\n"
    << "numerics.psf_grid_step = "
    << (c.numerics.psf_grid_step == 0.0 ? std::string("auto") : fmt(c.numerics.psf_grid_step))
    << "\n"
    << "numerics.null_threshold = " << fmt(c.numerics.null_threshold) << "\n"
    << "numerics.db_reference = " << to_string(c.numerics.db_reference) << "\n"
    << "numerics.phase_compensation = " << (c.numerics.phase_compensation ? "true" : "false")
    << "\n"
    << "numerics.snr_min_unit = " << to_string(c.numerics.snr_min_unit) << "\n"
    << "numerics.slant_resolution = " << to_string(c.numerics.slant_resolution) << "\n"
    << "numerics.energy_penalty = " << to_string(c.numerics.energy_penalty) << "\n";
  return o.str();
}

void save_config(const ScenarioConfig& config, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + path.string());
  out << format_config(config);
}

}  // namespace tomoswarm
