#pragma once

// Spatial-gradient and FWHM localization metrics of normalized signals,
// and the per-order comparison rows built from them.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "tripod/errors.hpp"
#include "tripod/grid.hpp"
#include "tripod/response.hpp"

namespace tripod {

// |grad s| with second-order central differences on interior points and
// second-order one-sided stencils on the boundary rows/columns, so steep
// edges near the window boundary are not excluded.
inline RealMap gradient_map(const NormalizedSignal& signal) {
  if (!signal.active)
    throw InactiveChannel("gradient requested on an inactive channel");
  const Grid2D& g = signal.map.grid;
  const double hx = g.dx(), hy = g.dy();
  const auto& s = signal.map;
  RealMap out(g);
  for (int iy = 0; iy < g.ny; ++iy) {
    for (int ix = 0; ix < g.nx; ++ix) {
      double gx, gy;
      if (ix == 0)
        gx = (-3.0 * s.at(0, iy) + 4.0 * s.at(1, iy) - s.at(2, iy)) / (2.0 * hx);
      else if (ix == g.nx - 1)
        gx = (3.0 * s.at(ix, iy) - 4.0 * s.at(ix - 1, iy) + s.at(ix - 2, iy)) / (2.0 * hx);
      else
        gx = (s.at(ix + 1, iy) - s.at(ix - 1, iy)) / (2.0 * hx);
      if (iy == 0)
        gy = (-3.0 * s.at(ix, 0) + 4.0 * s.at(ix, 1) - s.at(ix, 2)) / (2.0 * hy);
      else if (iy == g.ny - 1)
        gy = (3.0 * s.at(ix, iy) - 4.0 * s.at(ix, iy - 1) + s.at(ix, iy - 2)) / (2.0 * hy);
      else
        gy = (s.at(ix, iy + 1) - s.at(ix, iy - 1)) / (2.0 * hy);
      out.at(ix, iy) = std::hypot(gx, gy);
    }
  }
  return out;
}

// Deterministic maximum over the gradient map, in 1/lambda.
inline double max_gradient(const RealMap& grad) {
  double peak = 0.0;
  for (double v : grad.values) peak = std::max(peak, v);
  return peak;
}

namespace detail {

// Width between the two outermost half-maximum crossings of |profile|,
// crossings located by linear interpolation. The maximum must sit at an
// interior sample and the profile must fall below half on both sides.
inline double fwhm_of_profile(const std::vector<double>& profile,
                              const std::vector<double>& coords) {
  const int n = int(profile.size());
  int imax = 0;
  for (int i = 1; i < n; ++i)
    if (profile[i] > profile[imax]) imax = i;
  if (imax == 0 || imax == n - 1)
    throw NoHalfCrossing("cross-section maximum sits on the window boundary");
  const double half = profile[imax] / 2.0;

  int left = 0;
  while (left < n && profile[left] < half) ++left;
  int right = n - 1;
  while (right >= 0 && profile[right] < half) --right;
  if (left == 0 || right == n - 1)
    throw NoHalfCrossing("cross-section never falls below half maximum inside the grid");

  const double xl = coords[left - 1] + (half - profile[left - 1]) *
                                           (coords[left] - coords[left - 1]) /
                                           (profile[left] - profile[left - 1]);
  const double xr = coords[right] + (half - profile[right]) *
                                        (coords[right + 1] - coords[right]) /
                                        (profile[right + 1] - profile[right]);
  return xr - xl;
}

}  // namespace detail

// FWHM of the central cross-section of |signal| along one axis
// (the y = 0 row for axis x), in lambda.
inline double fwhm_cross_section(const NormalizedSignal& signal, Axis axis) {
  if (!signal.active)
    throw InactiveChannel("fwhm requested on an inactive channel");
  const Grid2D& g = signal.map.grid;
  std::vector<double> profile, coords;
  if (axis == Axis::X) {
    const int iy = g.ny / 2;
    profile.resize(g.nx);
    coords.resize(g.nx);
    for (int ix = 0; ix < g.nx; ++ix) {
      profile[ix] = std::abs(signal.map.at(ix, iy));
      coords[ix] = g.x(ix);
    }
  } else {
    const int ix = g.nx / 2;
    profile.resize(g.ny);
    coords.resize(g.ny);
    for (int iy = 0; iy < g.ny; ++iy) {
      profile[iy] = std::abs(signal.map.at(ix, iy));
      coords[iy] = g.y(iy);
    }
  }
  return detail::fwhm_of_profile(profile, coords);
}

// Metrics for one sensing channel at one detuning. max_gradient is
// defined iff the channel is active; fwhm additionally requires a valid
// half-maximum width (its failure reason lands in note).
struct ChannelResult {
  SensingChannel channel = SensingChannel::Absorption;
  double detuning = 0.0;
  std::optional<double> max_gradient;
  std::optional<double> fwhm;
  bool active = false;
  std::string note;
};

// One row of a comparison report across channels at a fixed beam order.
struct ComparisonRow {
  int order = 1;
  ChannelResult abs_result;
  ChannelResult eit_result;
  std::optional<double> gradient_ratio;  // eit / abs
  std::optional<double> fwhm_ratio;      // abs / eit
};

inline ComparisonRow build_comparison_row(int order, const ChannelResult& abs_result,
                                          const ChannelResult& eit_result) {
  ComparisonRow row;
  row.order = order;
  row.abs_result = abs_result;
  row.eit_result = eit_result;
  if (abs_result.max_gradient && eit_result.max_gradient)
    row.gradient_ratio = *eit_result.max_gradient / *abs_result.max_gradient;
  if (abs_result.fwhm && eit_result.fwhm)
    row.fwhm_ratio = *abs_result.fwhm / *eit_result.fwhm;
  return row;
}

}  // namespace tripod
