#pragma once

// Super-Gaussian control beam profiles and their sampling onto the grid.

#include <cmath>
#include <string>
#include <utility>

#include "tripod/errors.hpp"
#include "tripod/grid.hpp"

namespace tripod {

enum class Axis { X, Y };

inline const char* axis_name(Axis a) { return a == Axis::X ? "x" : "y"; }

// Omega(c) = Omega0 * exp(-(c/w)^(2P)). Integer order only: P = 1 is
// Gaussian, large P approaches a flat top with steep edges.
struct SuperGaussianBeam {
  double peak_rabi = 5.0;
  double waist = 0.2;
  int order = 1;
  Axis axis = Axis::X;

  void validate() const {
    if (!(peak_rabi >= 0.0) || !std::isfinite(peak_rabi))
      throw ValidationError("peak_rabi must be >= 0 and finite");
    if (!(waist > 0.0) || !std::isfinite(waist))
      throw ValidationError("waist must be > 0 and finite");
    if (order < 1)
      throw ValidationError("order must be an integer >= 1, got " + std::to_string(order));
  }
};

namespace detail {
// t^n by binary exponentiation; n >= 0. Overflow to inf is acceptable,
// exp(-inf) underflows to the correct limit 0.
inline double ipow(double t, int n) {
  double acc = 1.0;
  while (n > 0) {
    if (n & 1) acc *= t;
    t *= t;
    n >>= 1;
  }
  return acc;
}
}  // namespace detail

// Profile value at one coordinate; result lies in [0, peak_rabi].
inline double rabi_profile(const SuperGaussianBeam& beam, double coord) {
  beam.validate();
  const double t = coord / beam.waist;
  return beam.peak_rabi * std::exp(-detail::ipow(t * t, beam.order));
}

// Sample both control beams onto a shared grid. The x beam is constant
// along y and vice versa.
inline std::pair<RealMap, RealMap> control_field_maps(const SuperGaussianBeam& beam_x,
                                                      const SuperGaussianBeam& beam_y,
                                                      const Grid2D& grid) {
  beam_x.validate();
  beam_y.validate();
  grid.validate();
  if (beam_x.axis == beam_y.axis)
    throw AxisMismatch(std::string("both beams modulate the ") + axis_name(beam_x.axis) +
                       " axis");
  if (beam_x.axis != Axis::X)
    throw AxisMismatch("beam_x must modulate the x axis");

  RealMap omega1(grid);
  RealMap omega2(grid);
  std::vector<double> along_x(grid.nx), along_y(grid.ny);
  for (int ix = 0; ix < grid.nx; ++ix) along_x[ix] = rabi_profile(beam_x, grid.x(ix));
  for (int iy = 0; iy < grid.ny; ++iy) along_y[iy] = rabi_profile(beam_y, grid.y(iy));
  for (int iy = 0; iy < grid.ny; ++iy)
    for (int ix = 0; ix < grid.nx; ++ix) {
      omega1.at(ix, iy) = along_x[ix];
      omega2.at(ix, iy) = along_y[iy];
    }
  return {std::move(omega1), std::move(omega2)};
}

}  // namespace tripod
