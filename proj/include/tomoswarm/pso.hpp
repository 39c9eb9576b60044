#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "tomoswarm/scenario.hpp"

namespace tomoswarm {

/// Axis-aligned search box; walls are closed.
struct SearchBox {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t dim() const { return lower.size(); }
  bool contains(std::span<const double> p) const;
};

/// Box over flat (x1, z1, ..., xI, zI) formations: z in the altitude bounds
/// and x in the range implied by the look-angle bounds at the altitude
/// extremes, x_t - z tan(theta).
SearchBox formation_box(const ScenarioConfig& config);

/// Formation box followed by I*K power coordinates in [0, P_max].
SearchBox full_encoding_box(const ScenarioConfig& config);

using Rng = std::mt19937_64;

/// p' = p + v.
void pso_position_update(std::span<double> p, std::span<const double> v);

/// v' = w v + c1 r1 (p_best - p) + c2 r2 (g_best - p) with fresh
/// r1, r2 ~ U[0, 1] per element, then clipped to [-v_max, v_max].
void pso_velocity_update(std::span<double> v, std::span<const double> p,
                         std::span<const double> p_best, std::span<const double> g_best, double w,
                         double c1, double c2, double v_max, Rng& rng);

/// Mirrors coordinates outside the box back in (2*wall - p) and negates the
/// matching velocity component, repeating until inside.
void reflect_walls(std::span<double> p, std::span<double> v, const SearchBox& box);

/// Linear schedule from w_start at iteration 1 to w_end at iteration M.
double inertia_weight(int iteration, int iterations, double w_start, double w_end);

}  // namespace tomoswarm
