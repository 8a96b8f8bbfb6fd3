#pragma once

// Rectangular spatial sampling in units of lambda, and scalar fields
// sampled on it. Storage is row-major in y then x, so values[iy*nx+ix]
// is the sample at (x_i, y_j).

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "tripod/atomic.hpp"
#include "tripod/errors.hpp"

namespace tripod {

struct Grid2D {
  double x_min = -0.5;
  double x_max = 0.5;
  double y_min = -0.5;
  double y_max = 0.5;
  int nx = 257;
  int ny = 257;

  void validate() const {
    if (!(x_max > x_min)) throw ValidationError("grid: x_max must exceed x_min");
    if (!(y_max > y_min)) throw ValidationError("grid: y_max must exceed y_min");
    if (nx < 3 || nx % 2 == 0)
      throw ValidationError("grid: nx must be odd and >= 3, got " + std::to_string(nx));
    if (ny < 3 || ny % 2 == 0)
      throw ValidationError("grid: ny must be odd and >= 3, got " + std::to_string(ny));
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(y_min) ||
        !std::isfinite(y_max))
      throw ValidationError("grid: extents must be finite");
  }

  double dx() const { return (x_max - x_min) / (nx - 1); }
  double dy() const { return (y_max - y_min) / (ny - 1); }
  double x(int ix) const { return x_min + ix * dx(); }
  double y(int iy) const { return y_min + iy * dy(); }

  bool operator==(const Grid2D&) const = default;
};

template <class T>
struct FieldMap {
  Grid2D grid;
  std::vector<T> values;

  FieldMap() = default;
  explicit FieldMap(const Grid2D& g) : grid(g), values(size_t(g.nx) * g.ny, T{}) {
    grid.validate();
  }

  T& at(int ix, int iy) { return values[size_t(iy) * grid.nx + ix]; }
  const T& at(int ix, int iy) const { return values[size_t(iy) * grid.nx + ix]; }

  bool all_finite() const {
    for (const T& v : values)
      if (!is_finite(v)) return false;
    return true;
  }
};

using RealMap = FieldMap<double>;
using ComplexMap = FieldMap<Complex>;

inline void require_same_grid(const Grid2D& a, const Grid2D& b) {
  if (!(a == b)) throw GridMismatch("field maps do not share a grid");
}

// Deterministic maximum of |value| over the map (fixed iteration order).
template <class T>
double max_abs(const FieldMap<T>& map) {
  double peak = 0.0;
  for (const T& v : map.values) peak = std::max(peak, std::abs(v));
  return peak;
}

}  // namespace tripod
